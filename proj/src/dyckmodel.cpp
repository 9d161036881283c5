#include "nclab/dyckmodel.hpp"

#include "nclab/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace nclab {

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
    heights_.reserve(steps_.size() + 1);
    heights_.push_back(0);
    for (char c : steps_) {
        if (c != 'U' && c != 'D') throw DomainError("Dyck path steps must be U or D, got '" + std::string(1, c) + "'");
        const int h = heights_.back() + (c == 'U' ? 1 : -1);
        if (h < 0) throw DomainError("Dyck path '" + steps_ + "' goes below the axis");
        heights_.push_back(h);
    }
    if (heights_.back() != 0) throw DomainError("Dyck path '" + steps_ + "' does not return to the axis");
}

bool DyckPath::is_t_dyck(int t) const {
    if (t > length()) return false;
    return std::all_of(steps_.begin(), steps_.begin() + t, [](char c) { return c == 'U'; });
}

std::vector<std::pair<int, int>> DyckPath::valleys() const {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k < length(); ++k) {
        if (steps_[static_cast<std::size_t>(k - 1)] == 'D' && steps_[static_cast<std::size_t>(k)] == 'U') {
            out.emplace_back(k, heights_[static_cast<std::size_t>(k)]);
        }
    }
    return out;
}

std::vector<DyckPath> enumerate_tdyck(int n, int t) {
    if (n < 1 || t < 1 || t > n) throw ParameterError("enumerate_tdyck needs 1 <= t <= n");
    std::vector<DyckPath> out;
    std::string word(static_cast<std::size_t>(2 * n), 'U');
    auto rec = [&](auto&& self, int pos, int ups, int height) -> void {
        if (pos == 2 * n) {
            out.emplace_back(word);
            return;
        }
        if (ups < n) {
            word[static_cast<std::size_t>(pos)] = 'U';
            self(self, pos + 1, ups + 1, height + 1);
        }
        if (height > 0 && pos >= t) {
            word[static_cast<std::size_t>(pos)] = 'D';
            self(self, pos + 1, ups, height - 1);
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

PathStats path_stats(const DyckPath& p) {
    PathStats s;
    s.length = p.length();
    const auto& w = p.steps();
    for (std::size_t k = 1; k < w.size(); ++k) {
        if (w[k - 1] == 'U' && w[k] == 'D') ++s.peaks;
    }
    for (const auto& [x, y] : p.valleys()) {
        ++s.valleys;
        if (y == 0) ++s.zero_valleys;
    }
    return s;
}

DyckPath theta(const TFilter& v) {
    const int n = v.n();
    std::vector<std::pair<int, int>> points{{0, 0}};
    for (const auto& q : v.minimal_elements()) points.emplace_back(q.i + q.j - 1, q.j - q.i - 1);
    std::sort(points.begin() + 1, points.end());
    points.emplace_back(2 * n, 0);
    std::string steps;
    for (std::size_t k = 1; k < points.size(); ++k) {
        const auto [x1, y1] = points[k - 1];
        const auto [x2, y2] = points[k];
        const int dx = x2 - x1;
        const int dy = y2 - y1;
        if (dx <= 0 || (dx + dy) % 2 != 0 || dx < std::abs(dy)) {
            throw InvariantError("theta: valley points are not joinable by a single peak");
        }
        steps.append(static_cast<std::size_t>((dx + dy) / 2), 'U');
        steps.append(static_cast<std::size_t>((dx - dy) / 2), 'D');
    }
    DyckPath path(std::move(steps));
    if (!path.is_t_dyck(v.t())) throw InvariantError("theta produced a path that is not t-Dyck");
    return path;
}

TFilter theta_inverse(const DyckPath& p, int t) {
    if (!p.is_t_dyck(t)) throw DomainError("theta_inverse: path is not a t-Dyck path");
    const int n = p.semilength();
    const TriangularPoset tri(n);
    TriangularPoset::Mask generators = 0;
    for (const auto& [x, y] : p.valleys()) {
        if ((x - y) % 2 != 0 || (x + y) % 2 != 0) throw InvariantError("theta_inverse: valley with odd coordinates");
        generators |= TriangularPoset::Mask{1} << tri.index({(x - y) / 2, (x + y) / 2 + 1});
    }
    return TFilter(n, t, tri.up_closure(generators));
}

bool ddom_leq(const DyckPath& p1, const DyckPath& p2) {
    if (p1.length() != p2.length()) throw DomainError("ddom_leq: paths of different length");
    const auto& a = p1.heights();
    const auto& b = p2.heights();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (b[k] > a[k]) return false;
    }
    return true;
}

Polynomial h_via_paths(int n, int t) {
    Polynomial out;
    for (const auto& path : enumerate_tdyck(n, t)) {
        const auto s = path_stats(path);
        out.add_term(s.valleys, s.zero_valleys, 1);
    }
    return out;
}

} // namespace nclab
