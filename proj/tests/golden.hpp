// Frozen worked-example vectors shared by the unit and acceptance suites.
#pragma once

#include "intdecomp/graph.hpp"
#include "intdecomp/matrix.hpp"

namespace golden {

using intdecomp::ComponentPartition;
using intdecomp::IntMatrix;
using intdecomp::RatMatrix;

inline const IntMatrix a{{2, -4, 2, 5, -6}, {2, -2, 2, 5, -3}, {0, -2, 1, 2, -3}};

inline const IntMatrix h{{2, 0, 0, 1, 0}, {0, 2, 0, 0, 3}, {0, 0, 1, 2, 0}};

inline const IntMatrix p{{1, -2, 2}, {1, -1, 2}, {0, -1, 1}};

inline const IntMatrix p_inverse{{1, 0, -2}, {-1, 1, 0}, {-1, 1, 1}};

inline const IntMatrix b{{4, 0, 0, 2, 0},
                         {0, 4, 0, 0, 6},
                         {0, 0, 1, 2, 0},
                         {2, 0, 2, 5, 0},
                         {0, 6, 0, 0, 9}};

inline const IntMatrix laplacian{{2, 0, 0, -2, 0},
                                 {0, 6, 0, 0, -6},
                                 {0, 0, 2, -2, 0},
                                 {-2, 0, -2, 4, 0},
                                 {0, -6, 0, 0, 6}};

inline const RatMatrix rref{{1, 0, 0, -1, 0},
                            {0, 1, 0, 0, -1},
                            {0, 0, 1, -1, 0},
                            {0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0}};

inline const ComponentPartition components{{{1, 3, 4}, {2, 5}}};

inline const IntMatrix block1{{2, 0, 1}, {0, 1, 2}};
inline const IntMatrix block2{{2, 3}};

inline const std::vector<std::size_t> q_one_based{1, 3, 4, 2, 5};

inline const IntMatrix hq{{2, 0, 1, 0, 0}, {0, 0, 0, 2, 3}, {0, 1, 2, 0, 0}};

} // namespace golden
