#pragma once

#include "nclab/nonnest.hpp"
#include "nclab/polyalg.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace nclab {

/// A Dyck path written over {U, D}. Heights are cached: heights()[k] is the
/// height after k steps, so heights() has length() + 1 entries.
class DyckPath {
public:
    // Throws DomainError unless the word is over {U, D}, stays weakly above
    // the axis and returns to it.
    explicit DyckPath(std::string steps);

    const std::string& steps() const { return steps_; }
    int length() const { return static_cast<int>(steps_.size()); }
    int semilength() const { return length() / 2; }
    const std::vector<int>& heights() const { return heights_; }
    // True iff the path starts with at least t up-steps.
    bool is_t_dyck(int t) const;

    // Valley coordinates (x, y) in increasing x.
    std::vector<std::pair<int, int>> valleys() const;

    friend bool operator==(const DyckPath& a, const DyckPath& b) { return a.steps_ == b.steps_; }
    // Lexicographic with U before D, the enumeration order.
    friend bool operator<(const DyckPath& a, const DyckPath& b) {
        return std::lexicographical_compare(a.steps_.begin(), a.steps_.end(), b.steps_.begin(), b.steps_.end(),
                                            [](char x, char y) { return x == 'U' && y == 'D'; });
    }

private:
    std::string steps_;
    std::vector<int> heights_;
};

struct PathStats {
    int valleys = 0;
    int peaks = 0;
    int zero_valleys = 0; // valleys at height 0
    int length = 0;
};

// D_{n,t}, in lexicographic order of the step word (U before D).
std::vector<DyckPath> enumerate_tdyck(int n, int t);

PathStats path_stats(const DyckPath& p);

// The t-Dyck path whose valleys are (i+j-1, j-i-1) for the minimal pairs (i,j).
DyckPath theta(const TFilter& v);
// Inverse of theta; valley (x, y) gives the pair ((x-y)/2, (x+y)/2 + 1).
TFilter theta_inverse(const DyckPath& p, int t);

// p1 <= p2 iff p2 lies weakly below p1. Throws DomainError on a length mismatch.
bool ddom_leq(const DyckPath& p1, const DyckPath& p2);

// sum over D_{n,t} of x^v(P) y^r(P)
Polynomial h_via_paths(int n, int t);

} // namespace nclab
