#include "tameblocks/root_datum.hpp"

#include "tameblocks/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace tameblocks {

namespace {

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

std::vector<long long> reflect(const std::vector<long long>& x,
                               const std::vector<long long>& root,
                               const std::vector<long long>& coroot) {
    long long c = dot(x, coroot);
    std::vector<long long> r(x);
    for (size_t i = 0; i < x.size(); ++i)
        r[i] -= c * root[i];
    return r;
}

std::vector<long long> negate(const std::vector<long long>& v) {
    std::vector<long long> r(v);
    for (auto& x : r)
        x = -x;
    return r;
}

// Solves (columns = simple roots) * c = v over Q; nullopt when inconsistent.
std::optional<RatVec> solve_in_simple_basis(const RootDatum& rd, const std::vector<long long>& v) {
    size_t s = rd.simple.size();
    size_t r = static_cast<size_t>(rd.rank);
    std::vector<std::vector<Rational>> m(r, std::vector<Rational>(s + 1));
    for (size_t i = 0; i < r; ++i) {
        for (size_t k = 0; k < s; ++k)
            m[i][k] = Rational(rd.simple_root(static_cast<int>(k))[i]);
        m[i][s] = Rational(v[i]);
    }
    std::vector<int> pivot_col(r, -1);
    size_t row = 0;
    for (size_t col = 0; col < s && row < r; ++col) {
        size_t p = row;
        while (p < r && m[p][col].is_zero())
            ++p;
        if (p == r)
            continue;
        std::swap(m[row], m[p]);
        Rational inv(m[row][col].den, m[row][col].num);
        for (size_t j = col; j <= s; ++j)
            m[row][j] = m[row][j] * inv;
        for (size_t i = 0; i < r; ++i) {
            if (i == row || m[i][col].is_zero())
                continue;
            Rational f = m[i][col];
            for (size_t j = col; j <= s; ++j)
                m[i][j] = m[i][j] - f * m[row][j];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    for (size_t i = row; i < r; ++i)
        if (!m[i][s].is_zero())
            return std::nullopt;
    RatVec c(s);
    for (size_t i = 0; i < row; ++i)
        c[static_cast<size_t>(pivot_col[i])] = m[i][s];
    return c;
}

} // namespace

RatVec simple_coefficients(const RootDatum& rd, const std::vector<long long>& v) {
    auto c = solve_in_simple_basis(rd, v);
    if (!c)
        throw validation_error("vector is not in the span of the simple roots");
    return *c;
}

RootDatum validate_root_datum(RootDatum raw) {
    if (raw.rank <= 0)
        throw validation_error("rank must be a positive integer");
    if (raw.roots.size() != raw.coroots.size())
        throw validation_error("roots and coroots have different lengths");
    for (size_t i = 0; i < raw.roots.size(); ++i)
        if (raw.roots[i].size() != static_cast<size_t>(raw.rank) ||
            raw.coroots[i].size() != static_cast<size_t>(raw.rank))
            throw validation_error("root/coroot " + std::to_string(i) + " has wrong dimension");

    std::map<std::vector<long long>, size_t> index_of;
    for (size_t i = 0; i < raw.roots.size(); ++i) {
        if (index_of.count(raw.roots[i]))
            throw validation_error("duplicate root at index " + std::to_string(i));
        index_of[raw.roots[i]] = i;
    }

    for (size_t i = 0; i < raw.roots.size(); ++i)
        if (dot(raw.roots[i], raw.coroots[i]) != 2)
            throw validation_error("pairing <alpha, alpha_vee> != 2 at root index " +
                                   std::to_string(i));

    for (size_t i = 0; i < raw.roots.size(); ++i) {
        for (size_t j = 0; j < raw.roots.size(); ++j) {
            auto img = reflect(raw.roots[j], raw.roots[i], raw.coroots[i]);
            auto it = index_of.find(img);
            if (it == index_of.end())
                throw validation_error("reflection by root " + std::to_string(i) +
                                       " does not permute the root list (image of root " +
                                       std::to_string(j) + " missing)");
            // Coroot of the reflected root must be the coreflected coroot.
            auto coimg = reflect(raw.coroots[j], raw.coroots[i], raw.roots[i]);
            if (raw.coroots[it->second] != coimg)
                throw validation_error("coroot list incompatible with reflection by root " +
                                       std::to_string(i) + " at root " + std::to_string(j));
        }
    }

    for (size_t i = 0; i < raw.roots.size(); ++i) {
        if (!index_of.count(negate(raw.roots[i])))
            throw validation_error("root " + std::to_string(i) + " has no negative");
        std::vector<long long> twice(raw.roots[i]);
        for (auto& x : twice)
            x *= 2;
        if (index_of.count(twice))
            throw validation_error("root list is not reduced (twice root " + std::to_string(i) +
                                   " is a root)");
    }

    std::set<int> simple_set(raw.simple.begin(), raw.simple.end());
    if (simple_set.size() != raw.simple.size())
        throw validation_error("simple indices contain duplicates");
    for (int k : raw.simple)
        if (k < 0 || static_cast<size_t>(k) >= raw.roots.size())
            throw validation_error("simple index out of range");

    for (size_t i = 0; i < raw.roots.size(); ++i) {
        auto c = solve_in_simple_basis(raw, raw.roots[i]);
        if (!c)
            throw validation_error("root " + std::to_string(i) +
                                   " is not in the span of the simple roots");
        bool nonneg = true, nonpos = true;
        for (const auto& x : *c) {
            if (!x.is_integer())
                throw validation_error("root " + std::to_string(i) +
                                       " has non-integer simple coefficients");
            nonneg = nonneg && x.num >= 0;
            nonpos = nonpos && x.num <= 0;
        }
        if (!nonneg && !nonpos)
            throw validation_error("root " + std::to_string(i) +
                                   " has mixed-sign simple coefficients");
    }

    // Canonical order: roots lexicographic, coroots carried along.
    std::vector<size_t> perm(raw.roots.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](size_t a, size_t b) { return raw.roots[a] < raw.roots[b]; });
    RootDatum rd;
    rd.rank = raw.rank;
    rd.name = raw.name;
    std::vector<size_t> where(perm.size());
    for (size_t pos = 0; pos < perm.size(); ++pos) {
        rd.roots.push_back(raw.roots[perm[pos]]);
        rd.coroots.push_back(raw.coroots[perm[pos]]);
        where[perm[pos]] = pos;
    }
    for (int k : raw.simple)
        rd.simple.push_back(static_cast<int>(where[static_cast<size_t>(k)]));
    std::sort(rd.simple.begin(), rd.simple.end());
    return rd;
}

BasedAutomorphism based_automorphism(const RootDatum& rd, IntMat matrix) {
    if (matrix.n != rd.rank)
        throw validation_error("automorphism matrix has wrong size");
    std::map<std::vector<long long>, size_t> index_of;
    for (size_t i = 0; i < rd.roots.size(); ++i)
        index_of[rd.roots[i]] = i;
    IntMat mt = transpose(matrix);
    for (size_t i = 0; i < rd.roots.size(); ++i) {
        auto img = mat_vec(matrix, rd.roots[i]);
        auto it = index_of.find(img);
        if (it == index_of.end())
            throw validation_error("matrix does not permute the root list (root " +
                                   std::to_string(i) + ")");
        // (theta alpha)_vee = theta^{-T} alpha_vee, i.e. theta^T (theta alpha)_vee = alpha_vee.
        if (mat_vec(mt, rd.coroots[it->second]) != rd.coroots[i])
            throw validation_error("matrix is not a root-datum automorphism (coroot of root " +
                                   std::to_string(i) + ")");
    }
    std::set<std::vector<long long>> simple_roots;
    for (size_t k = 0; k < rd.simple.size(); ++k)
        simple_roots.insert(rd.simple_root(static_cast<int>(k)));
    for (size_t k = 0; k < rd.simple.size(); ++k)
        if (!simple_roots.count(mat_vec(matrix, rd.simple_root(static_cast<int>(k)))))
            throw validation_error("matrix does not stabilize the base (not based)");
    BasedAutomorphism theta;
    theta.order = matrix_order(matrix);
    theta.matrix = std::move(matrix);
    return theta;
}

std::vector<int> simple_action(const RootDatum& rd, const IntMat& theta) {
    std::vector<int> perm(rd.simple.size());
    for (size_t k = 0; k < rd.simple.size(); ++k) {
        auto img = mat_vec(theta, rd.simple_root(static_cast<int>(k)));
        bool found = false;
        for (size_t j = 0; j < rd.simple.size(); ++j)
            if (rd.simple_root(static_cast<int>(j)) == img) {
                perm[k] = static_cast<int>(j);
                found = true;
                break;
            }
        if (!found)
            throw validation_error("automorphism is not based");
    }
    return perm;
}

RootDatum dual_root_datum(const RootDatum& rd) {
    RootDatum d;
    d.rank = rd.rank;
    d.name = rd.name;
    d.roots = rd.coroots;
    d.coroots = rd.roots;
    d.simple = rd.simple;
    return validate_root_datum(std::move(d));
}

BasedAutomorphism transpose_automorphism(const RootDatum& rd, const BasedAutomorphism& theta) {
    RootDatum dual = dual_root_datum(rd);
    BasedAutomorphism t = based_automorphism(dual, transpose(theta.matrix));
    if (t.order != theta.order)
        throw validation_error("transpose changed the automorphism order");
    return t;
}

RootDatum levi_subdatum(const RootDatum& rd, const std::vector<int>& simple_positions) {
    for (int k : simple_positions)
        if (k < 0 || static_cast<size_t>(k) >= rd.simple.size())
            throw validation_error("levi subset position out of range");
    std::set<int> keep(simple_positions.begin(), simple_positions.end());
    RootDatum levi;
    levi.rank = rd.rank;
    levi.name = rd.name + ":levi";
    for (size_t i = 0; i < rd.roots.size(); ++i) {
        RatVec c = simple_coefficients(rd, rd.roots[i]);
        bool supported = true;
        for (size_t k = 0; k < c.size(); ++k)
            if (!c[k].is_zero() && !keep.count(static_cast<int>(k)))
                supported = false;
        if (supported) {
            levi.roots.push_back(rd.roots[i]);
            levi.coroots.push_back(rd.coroots[i]);
        }
    }
    for (size_t i = 0; i < levi.roots.size(); ++i)
        for (int k : simple_positions)
            if (levi.roots[i] == rd.simple_root(k))
                levi.simple.push_back(static_cast<int>(i));
    return validate_root_datum(std::move(levi));
}

std::vector<Component> components(const RootDatum& rd) {
    size_t s = rd.simple.size();
    std::vector<int> comp(s, -1);
    int n_comp = 0;
    for (size_t start = 0; start < s; ++start) {
        if (comp[start] >= 0)
            continue;
        std::vector<size_t> stack{start};
        comp[start] = n_comp;
        while (!stack.empty()) {
            size_t i = stack.back();
            stack.pop_back();
            for (size_t j = 0; j < s; ++j) {
                if (comp[j] >= 0)
                    continue;
                if (dot(rd.simple_root(static_cast<int>(i)),
                        rd.simple_coroot(static_cast<int>(j))) != 0) {
                    comp[j] = n_comp;
                    stack.push_back(j);
                }
            }
        }
        ++n_comp;
    }
    std::vector<Component> out(static_cast<size_t>(n_comp));
    for (size_t k = 0; k < s; ++k)
        out[static_cast<size_t>(comp[k])].simple_positions.push_back(static_cast<int>(k));
    for (size_t i = 0; i < rd.roots.size(); ++i) {
        RatVec c = simple_coefficients(rd, rd.roots[i]);
        int which = -1;
        for (size_t k = 0; k < c.size(); ++k)
            if (!c[k].is_zero())
                which = comp[k];
        out[static_cast<size_t>(which)].root_indices.push_back(static_cast<int>(i));
    }
    // Highest root per component: maximal height (sum of simple coefficients).
    for (auto& cc : out) {
        Rational best(-1);
        for (int ri : cc.root_indices) {
            RatVec c = simple_coefficients(rd, rd.roots[static_cast<size_t>(ri)]);
            Rational h(0);
            for (const auto& x : c)
                h = h + x;
            if (best < h) {
                best = h;
                cc.highest_root = rd.roots[static_cast<size_t>(ri)];
            }
        }
        RatVec marks = simple_coefficients(rd, cc.highest_root);
        for (int k : cc.simple_positions)
            cc.marks.push_back(marks[static_cast<size_t>(k)].num);
    }
    return out;
}

std::vector<AffineNode> affine_simple_system(const RootDatum& rd) {
    std::vector<AffineNode> nodes;
    auto comps = components(rd);
    for (size_t c = 0; c < comps.size(); ++c) {
        for (int k : comps[c].simple_positions)
            nodes.push_back(AffineNode{rd.simple_root(k), 0, static_cast<int>(c)});
        std::vector<long long> neg = comps[c].highest_root;
        for (auto& x : neg)
            x = -x;
        nodes.push_back(AffineNode{std::move(neg), 1, static_cast<int>(c)});
    }
    return nodes;
}

} // namespace tameblocks
