#include "tetra/errors.hpp"
#include "tetra/identities.hpp"
#include "tetra/json_io.hpp"
#include "tetra/objects.hpp"
#include "tetra/tetra_poset.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace tetra;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TETRAPOSET_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("tetraposet_test_" + name);
  std::ofstream(p) << content;
  return p.string();
}

const char* kWorkedAsm = "[[0,1,0,0],[1,-1,0,1],[0,0,1,0],[0,1,0,0]]";
const char* kWorkedTsscpp =
    "[[8,8,8,8,6,6,4,4],[8,8,8,8,6,5,4,4],[8,8,7,6,5,4,3,2],[8,8,6,5,4,3,2,2],"
    "[6,6,5,4,3,2,0,0],[6,5,4,3,2,1,0,0],[4,4,3,2,0,0,0,0],[4,4,2,2,0,0,0,0]]";

}  // namespace

TEST(Json, ObjectRoundTrips) {
  for_each_asm(4, [](const Asm& a) {
    EXPECT_EQ(asm_from_json(Json::parse(to_json(a).dump())), a);
    const auto m = asm_to_mt(a);
    EXPECT_EQ(mt_from_json(to_json(m)), m);
  });
  for_each_tournament(4, [](const Tournament& t) { EXPECT_EQ(tournament_from_json(to_json(t)), t); });
  for (const auto& x : all_arrays(4, kTsscppColors)) {
    EXPECT_EQ(array_from_json(to_json(x)), x);
    const auto t = array_to_tsscpp(x);
    EXPECT_EQ(tsscpp_from_json(to_json(t)), t);
  }
  const auto p = Subposet::of(4, ColorSet::parse("gybo"));
  enumerate_ideals(p, [&](const OrderIdeal& i) { EXPECT_EQ(ideal_from_json(p, ideal_to_json(p.parent(), i)), i); });
  const auto gf = tournament_gf(4);
  EXPECT_EQ(sparse_poly_from_json(to_json(gf)), gf);
}

TEST(Json, Formats) {
  EXPECT_EQ(to_json(StaircaseArray::minimal(2)).dump(), "[[1,1],[2]]");
  EXPECT_EQ(to_json(QPoly({1, 2})).dump(), R"(["1","2"])");
  Tournament t(2);
  t.set_upset(1, 2, true);
  EXPECT_EQ(to_json(t).dump(), "[[1,2,2]]");
  const auto j = poset_to_json(Subposet::of(3, ColorSet::parse("gy")));
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["colors"].dump(), R"(["g","y"])");
  EXPECT_EQ(j["vertices"].size(), 4u);
}

TEST(Json, MalformedInputRejected) {
  EXPECT_THROW(asm_from_json(Json::parse("[[1,0],[0]]")), InvalidInput);
  EXPECT_THROW(asm_from_json(Json::parse(R"({"a":1})")), InvalidInput);
  EXPECT_THROW(tournament_from_json(Json::parse("[[1,2,1],[1,3,1]]")), InvalidInput);
  const auto p = Subposet::of(3, ColorSet::parse("g"));
  EXPECT_THROW(ideal_from_json(p, Json::parse("[[0,1,0]]")), InvalidInput);
  EXPECT_THROW(ideal_from_json(p, Json::parse("[[5,5,5]]")), InvalidInput);
}

TEST(Cli, Count) {
  EXPECT_EQ(run("count --n 4 --colors gybo").out, "42\n");
  EXPECT_EQ(run("count --n 5 --colors rgy").out, "2498\n");
  EXPECT_EQ(run("count --n 4 --colors gybo --method enum").out, "42\n");
  EXPECT_EQ(run("count --n 4 --colors gybo --method formula").out, "42\n");
  EXPECT_EQ(run("count --n 3 --colors brg --q").out, "8\n1 + 2*q + 2*q^2 + 2*q^3 + q^4\n");
  for (const char* five : {"rbgoy", "bgoys", "rbgys"})
    EXPECT_EQ(run(std::string("count --n 4 --method formula --colors ") + five).code, 3) << five;
  EXPECT_EQ(run("count --n 4 --colors rbgos --method formula").code, 2);
  EXPECT_EQ(run("count --n 4 --colors rgy --method formula").code, 3);
  EXPECT_EQ(run("count --n 4 --colors rb").code, 2);
  EXPECT_EQ(run("count --n 4 --colors sbr").code, 2);
  EXPECT_EQ(run("count --n 4 --colors xyz").code, 2);
  EXPECT_EQ(run("count --n 0 --colors g").code, 2);
  EXPECT_EQ(run("count --colors g").code, 2);
  EXPECT_EQ(run("count --n 4 --colors g --method magic").code, 2);
  const auto j = Json::parse(run("count --n 4 --colors rbgoys --q --json").out);
  EXPECT_EQ(j["count"], "16");
  EXPECT_EQ(j["rank_gf"].size(), 11u);
}

TEST(Cli, CountBudget) {
  EXPECT_EQ(run("count --n 4 --colors g --method enum").code, 0);
  const std::string cmd = "env TETRAPOSET_BUDGET=10 " + std::string(TETRAPOSET_CLI) +
                          " count --n 4 --colors g --method enum >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}

TEST(Cli, ConvertWorkedExamples) {
  const auto asm_file = write_temp("asm.json", kWorkedAsm);
  EXPECT_EQ(run("convert --from asm --to mt --input " + asm_file).out, "[[2],[1,4],[1,3,4],[1,2,3,4]]\n");
  EXPECT_EQ(run("convert --from asm --to array --input " + asm_file).out, "[[1,1,1,2],[2,3,4],[3,4],[4]]\n");
  EXPECT_EQ(run("convert --from asm --to tournament --input " + asm_file).code, 4);

  const auto ts_file = write_temp("tsscpp.json", kWorkedTsscpp);
  EXPECT_EQ(run("convert --from tsscpp --to array --input " + ts_file).out, "[[1,1,2,4],[2,2,4],[3,3],[4]]\n");
  const auto back = write_temp("tsscpp_array.json", "[[1,1,2,4],[2,2,4],[3,3],[4]]");
  EXPECT_EQ(Json::parse(run("convert --from array --to tsscpp --input " + back).out), Json::parse(kWorkedTsscpp));
  EXPECT_EQ(run("convert --from array --to asm --input " + back).code, 4);

  const auto id_file = write_temp("id3.json", "[[1,0,0],[0,1,0],[0,0,1]]");
  EXPECT_EQ(run("convert --from asm --to tournament --input " + id_file).out, "[[1,2,1],[1,3,1],[2,3,2]]\n");
}

TEST(Cli, ConvertIdeals) {
  const auto asm_file = write_temp("asm2.json", kWorkedAsm);
  const auto r = run("convert --from asm --to ideal --colors gybo --input " + asm_file);
  ASSERT_EQ(r.code, 0);
  const auto ideal_file = write_temp("ideal.json", r.out);
  EXPECT_EQ(Json::parse(run("convert --from ideal --to asm --n 4 --colors gybo --input " + ideal_file).out),
            Json::parse(kWorkedAsm));
  EXPECT_EQ(run("convert --from ideal --to asm --input " + ideal_file).code, 2);
  EXPECT_EQ(run("convert --from asm --to ideal --colors brg --input " + asm_file).code, 4);
}

TEST(Cli, ConvertInvalid) {
  const auto bad = write_temp("bad.json", "[[1,1],[0,0]]");
  EXPECT_EQ(run("convert --from asm --to mt --input " + bad).code, 2);
  const auto junk = write_temp("junk.json", "not json");
  EXPECT_EQ(run("convert --from asm --to mt --input " + junk).code, 2);
  EXPECT_EQ(run("convert --from asm --to mt --input /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("convert --from cube --to mt --input " + bad).code, 2);
}

TEST(Cli, Verify) {
  const auto r = run("verify --identity rr --n 2 --no-timing");
  EXPECT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "equal");
  EXPECT_EQ(j["elapsed_ms"], 0);
  EXPECT_EQ(j["lhs"], "x1 + lambda*x2");

  const auto c = Json::parse(run("verify --identity tsscpp-count --n 4").out);
  EXPECT_EQ(c["status"], "equal");
  EXPECT_EQ(c["lhs"], QPoly({1, 1}).pow(6).to_string("lambda"));

  const auto f = run("verify --identity formulas --n 5 --no-timing");
  EXPECT_EQ(f.code, 0);
  std::size_t lines = 0;
  std::istringstream in(f.out);
  for (std::string line; std::getline(in, line); ++lines) EXPECT_EQ(Json::parse(line)["status"], "equal");
  EXPECT_EQ(lines, 34u);
  EXPECT_EQ(run("verify --identity bogus --n 3").code, 2);
}

TEST(Cli, ExportDot) {
  const fs::path out = fs::temp_directory_path() / "tetraposet_test.dot";
  EXPECT_EQ(run("export-dot --n 4 --colors rbgoys --output " + out.string()).code, 0);
  std::ifstream in(out);
  const std::string dot((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(dot, to_dot(Subposet::of(4, ColorSet::all())));
  EXPECT_EQ(run("export-dot --n 2 --colors g").out.find("->"), std::string::npos);
  EXPECT_EQ(run("export-dot --n 4 --colors rb").code, 2);
  EXPECT_NE(run("export-dot --n 4 --colors g --output /nonexistent/dir/x.dot").code, 0);
}

TEST(Cli, PosetAndSeedList) {
  const auto j = Json::parse(run("poset --n 4 --colors gybo").out);
  EXPECT_EQ(j["vertices"].size(), 10u);

  auto lines = [](const std::string& s) {
    std::size_t k = 0;
    for (char c : s) k += c == '\n';
    return k;
  };
  EXPECT_EQ(lines(run("seed-list --family asm --n 4").out), 42u);
  EXPECT_EQ(lines(run("seed-list --family mt --n 4").out), 42u);
  EXPECT_EQ(lines(run("seed-list --family tsscpp --n 4").out), 42u);
  EXPECT_EQ(lines(run("seed-list --family tournament --n 4").out), 64u);
  EXPECT_EQ(lines(run("seed-list --family array --n 4 --colors rgy").out), 96u);
  EXPECT_EQ(lines(run("seed-list --family ideal --n 4 --colors y").out), 288u);
  EXPECT_EQ(run("seed-list --family ideal --n 4").code, 2);
}

TEST(Cli, Deterministic) {
  for (const char* args : {"count --n 5 --colors gyo --q --json", "verify --identity asm --n 4 --no-timing",
                           "seed-list --family ideal --n 4 --colors bg", "export-dot --n 4 --colors rgy"}) {
    EXPECT_EQ(run(args).out, run(args).out) << args;
  }
}
