#ifndef SEXTIC_MORDELL_HPP
#define SEXTIC_MORDELL_HPP

#include <string>
#include <vector>

#include "sextic/arith.hpp"

namespace sextic {

struct MordellPoint {
    Integer X;
    Integer Y; // >= 0
};

/// Integral points on Y^2 = X^3 + N with |X| <= x_bound. Complete within the
/// bound only; nothing is claimed beyond it.
struct MordellResult {
    Integer N;
    Integer x_bound;
    std::vector<MordellPoint> points; // sorted by X
};

/// Exhaustive perfect-square testing of X^3 + N over the window, chunked
/// across jobs threads with a deterministic merged result.
MordellResult integral_points_bounded(const Integer& N, const Integer& x_bound,
                                      unsigned jobs = 0);

struct TableCheck {
    std::string name;
    bool pass = false;
    std::vector<std::string> lines; // per-row detail, canonical order
};

struct PaperTablesReport {
    TableCheck table2; // viable (A,B) pairs from Y^2 = X^3 + 2^4 3^3 B^5, X = 4AB
    TableCheck table4; // solutions of A^2 (A/B) = -(3^(2n)+27)/4 for n in {0,1,2}
    TableCheck table5; // integral X on the eight curves E_i^± and their pairs
    TableCheck a4_curve; // Y^2 = X^3 - 432 yields exactly X = 12
    bool all_pass = false;
};

/// Recomputes the table data by bounded search plus the X <-> (A,B)
/// translations and compares against the transcribed rows. x_bound must be
/// at least 2000 (the largest tabulated X is 1942).
PaperTablesReport verify_paper_tables(const Integer& x_bound = 100000, unsigned jobs = 0);

} // namespace sextic

#endif
