#include "milnor/weighted.hpp"

#include <algorithm>

#include "milnor/errors.hpp"
#include "milnor/linalg.hpp"

namespace milnor {

namespace {

bool all_positive(const QRow& v) {
    for (const auto& x : v)
        if (x <= 0) return false;
    return true;
}

bool all_nonnegative(const QRow& v) {
    for (const auto& x : v)
        if (x < 0) return false;
    return true;
}

// Checks M a = 1 exactly.
bool satisfies(const QMatrix& m, const QRow& a) {
    for (const auto& row : m) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < a.size(); ++j) s += row[j] * a[j];
        if (s != 1) return false;
    }
    return true;
}

}  // namespace

std::optional<WeightVector> detect_weights(const Polynomial& germ) {
    if (germ.is_zero()) throw PreconditionError("weights of the zero germ");
    if (germ.constant_coeff() != 0) throw PreconditionError("germ does not vanish at the origin");
    int n = germ.nvars();
    for (int v = 0; v < n; ++v)
        if (!germ.depends_on(v)) return std::nullopt;

    QMatrix m;
    for (const auto& t : germ.terms()) {
        QRow row(n);
        for (int v = 0; v < n; ++v) row[v] = t.exp[v];
        if (std::find(m.begin(), m.end(), row) == m.end()) m.push_back(std::move(row));
    }
    QRow ones(m.size(), 1);
    auto particular = solve(m, ones);
    if (!particular) return std::nullopt;

    int r = rank(m);
    if (r == n) {
        if (!all_positive(*particular)) return std::nullopt;
        return WeightVector{*particular};
    }

    // Underdetermined: enumerate basic solutions (vertices of {Ma=1, a>=0}),
    // obtained by zeroing n - r coordinates at a time.
    int zeros = n - r;
    std::vector<QRow> vertices;
    std::vector<int> pick(zeros);
    auto try_subset = [&](const std::vector<int>& zset) {
        std::vector<bool> zeroed(n, false);
        for (int z : zset) zeroed[z] = true;
        std::vector<int> cols;
        for (int v = 0; v < n; ++v)
            if (!zeroed[v]) cols.push_back(v);
        QMatrix sub;
        for (const auto& row : m) {
            QRow s;
            for (int c : cols) s.push_back(row[c]);
            sub.push_back(std::move(s));
        }
        if (rank(sub) != static_cast<int>(cols.size())) return;  // not a basic direction
        auto sol = solve(sub, ones);
        if (!sol) return;
        QRow full(n, 0);
        for (std::size_t i = 0; i < cols.size(); ++i) full[cols[i]] = (*sol)[i];
        if (!all_nonnegative(full) || !satisfies(m, full)) return;
        if (std::find(vertices.begin(), vertices.end(), full) == vertices.end()) vertices.push_back(std::move(full));
    };
    // iterate over all subsets of size `zeros`
    std::vector<int> idx(zeros);
    auto rec = [&](auto&& self, int start, int k) -> void {
        if (k == zeros) {
            try_subset(idx);
            return;
        }
        for (int v = start; v < n; ++v) {
            idx[k] = v;
            self(self, v + 1, k + 1);
        }
    };
    rec(rec, 0, 0);

    if (vertices.empty()) return std::nullopt;

    const QRow* best = nullptr;
    mpq_class best_sum;
    for (const auto& v : vertices) {
        if (!all_positive(v)) continue;
        mpq_class s = 0;
        for (const auto& x : v) s += x;
        if (!best || s < best_sum || (s == best_sum && v < *best)) {
            best = &v;
            best_sum = s;
        }
    }
    if (best) return WeightVector{*best};

    QRow centroid(n, 0);
    for (const auto& v : vertices)
        for (int i = 0; i < n; ++i) centroid[i] += v[i];
    for (int i = 0; i < n; ++i) centroid[i] /= static_cast<long>(vertices.size());
    if (all_positive(centroid) && satisfies(m, centroid)) return WeightVector{centroid};
    return std::nullopt;
}

mpq_class milnor_orlik(const WeightVector& w) {
    mpq_class p = 1;
    for (const auto& a : w.a) {
        if (a <= 0) throw PreconditionError("weights must be positive");
        p *= (1 / a - 1);
    }
    return p;
}

}  // namespace milnor
