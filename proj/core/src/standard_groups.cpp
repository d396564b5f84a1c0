#include "tameblocks/standard_groups.hpp"

#include "tameblocks/errors.hpp"
#include "tameblocks/weyl.hpp"

#include <set>

namespace tameblocks {

RootDatum torus_datum(int rank) {
    RootDatum rd;
    rd.rank = rank;
    rd.name = "T" + std::to_string(rank);
    return validate_root_datum(std::move(rd));
}

RootDatum sl2_datum() {
    RootDatum rd;
    rd.rank = 1;
    rd.name = "SL2";
    rd.roots = {{2}, {-2}};
    rd.coroots = {{1}, {-1}};
    rd.simple = {0};
    return validate_root_datum(std::move(rd));
}

RootDatum pgl2_datum() {
    RootDatum rd;
    rd.rank = 1;
    rd.name = "PGL2";
    rd.roots = {{1}, {-1}};
    rd.coroots = {{2}, {-2}};
    rd.simple = {0};
    return validate_root_datum(std::move(rd));
}

RootDatum gl_datum(int n) {
    RootDatum rd;
    rd.rank = n;
    rd.name = "GL" + std::to_string(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            std::vector<long long> v(static_cast<size_t>(n), 0);
            v[static_cast<size_t>(i)] = 1;
            v[static_cast<size_t>(j)] = -1;
            rd.roots.push_back(v);
            rd.coroots.push_back(v);
            if (j == i + 1)
                rd.simple.push_back(static_cast<int>(rd.roots.size()) - 1);
        }
    return validate_root_datum(std::move(rd));
}

RootDatum sp4_datum() {
    RootDatum rd;
    rd.rank = 2;
    rd.name = "Sp4";
    auto push = [&](std::vector<long long> root, std::vector<long long> coroot) {
        rd.roots.push_back(root);
        rd.coroots.push_back(coroot);
        std::vector<long long> nr = root, nc = coroot;
        for (auto& x : nr)
            x = -x;
        for (auto& x : nc)
            x = -x;
        rd.roots.push_back(nr);
        rd.coroots.push_back(nc);
    };
    push({2, 0}, {1, 0});
    push({0, 2}, {0, 1});
    push({1, 1}, {1, 1});
    push({1, -1}, {1, -1});
    rd.simple = {6, 2}; // (1,-1) and (0,2)
    return validate_root_datum(std::move(rd));
}

RootDatum so5_datum() {
    RootDatum rd;
    rd.rank = 2;
    rd.name = "SO5";
    auto push = [&](std::vector<long long> root, std::vector<long long> coroot) {
        rd.roots.push_back(root);
        rd.coroots.push_back(coroot);
        std::vector<long long> nr = root, nc = coroot;
        for (auto& x : nr)
            x = -x;
        for (auto& x : nc)
            x = -x;
        rd.roots.push_back(nr);
        rd.coroots.push_back(nc);
    };
    push({1, 0}, {2, 0});
    push({0, 1}, {0, 2});
    push({1, 1}, {1, 1});
    push({1, -1}, {1, -1});
    rd.simple = {6, 2}; // (1,-1) and (0,1)
    return validate_root_datum(std::move(rd));
}

RootDatum simply_connected_datum(const std::string& name,
                                 const std::vector<std::vector<long long>>& cartan) {
    size_t l = cartan.size();
    RootDatum rd;
    rd.rank = static_cast<int>(l);
    rd.name = name;
    // Simple roots in weight coordinates, simple coroots the coordinate basis;
    // the full lists by closing (root, coroot) pairs under simple reflections.
    std::vector<std::vector<long long>> sroots(l, std::vector<long long>(l, 0)),
        scoroots(l, std::vector<long long>(l, 0));
    for (size_t j = 0; j < l; ++j) {
        scoroots[j][j] = 1;
        for (size_t i = 0; i < l; ++i)
            sroots[j][i] = cartan[i][j];
    }
    std::set<std::pair<std::vector<long long>, std::vector<long long>>> pairs;
    for (size_t j = 0; j < l; ++j)
        pairs.insert({sroots[j], scoroots[j]});
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = pairs;
        for (const auto& [root, coroot] : snapshot)
            for (size_t j = 0; j < l; ++j) {
                long long c = 0;
                for (size_t i = 0; i < l; ++i)
                    c += root[i] * scoroots[j][i];
                auto r2 = root;
                auto cr2 = coroot;
                for (size_t i = 0; i < l; ++i) {
                    r2[i] -= c * sroots[j][i];
                }
                long long cc = 0;
                for (size_t i = 0; i < l; ++i)
                    cc += coroot[i] * sroots[j][i];
                for (size_t i = 0; i < l; ++i)
                    cr2[i] -= cc * scoroots[j][i];
                if (pairs.insert({r2, cr2}).second)
                    grew = true;
            }
    }
    for (const auto& [root, coroot] : pairs) {
        rd.roots.push_back(root);
        rd.coroots.push_back(coroot);
    }
    for (size_t j = 0; j < l; ++j)
        for (size_t i = 0; i < rd.roots.size(); ++i)
            if (rd.roots[i] == sroots[j])
                rd.simple.push_back(static_cast<int>(i));
    return validate_root_datum(std::move(rd));
}

BasedAutomorphism identity_automorphism(const RootDatum& rd) {
    return based_automorphism(rd, IntMat::identity(rd.rank));
}

BasedAutomorphism gl_flip(const RootDatum& rd) {
    IntMat m(rd.rank);
    for (int i = 0; i < rd.rank; ++i)
        m.at(i, rd.rank - 1 - i) = -1;
    return based_automorphism(rd, m);
}

FrobeniusDescriptor split_frobenius(const RootDatum& rd, long long q, long long p, Lambda lambda,
                                    std::optional<long long> ell) {
    FrobeniusDescriptor f;
    f.theta = identity_automorphism(rd);
    f.q = q;
    f.p = p;
    f.ell = ell;
    f.lambda = lambda;
    validate_frobenius(f);
    return f;
}

} // namespace tameblocks
