#pragma once

#include "tetra/staircase_array.hpp"

#include <functional>
#include <vector>

namespace tetra {

/// Maps a tournament array (Y_n({b,r,g})) to the TSSCPP array of its fiber
/// by sorting rows bottom-up, swapping out-of-order neighbours together with
/// their northeast diagonals. Rejects inputs outside Y_n({b,r,g}).
StaircaseArray sort_to_tsscpp(const StaircaseArray& beta);

/// Every row shuffle of alpha that lies in Y_n({b,r,g}); this is exactly the
/// fiber of sort_to_tsscpp over alpha. Requires alpha in Y_n({b,r,g,y}).
void enumerate_row_shuffles(const StaircaseArray& alpha,
                            const std::function<void(const StaircaseArray&)>& visit);
std::vector<StaircaseArray> row_shuffles(const StaircaseArray& alpha);

}  // namespace tetra
