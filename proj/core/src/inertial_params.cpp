#include "tameblocks/inertial_params.hpp"

#include "tameblocks/errors.hpp"

#include <algorithm>
#include <set>

namespace tameblocks {

InertialParam make_inertial_param(const RatVec& v, const WeylGroup& w0,
                                  const FrobeniusDescriptor& f, Lambda lambda) {
    InertialParam phi;
    phi.rep = canonical_rep(v, w0.elements);
    phi.lambda = lambda;
    phi.order = class_order(phi.rep);
    if (!order_invertible(phi.order, f, lambda))
        throw validation_error("parameter order is not invertible in the coefficient ring");
    if (!is_F_stable(phi.rep, w0.elements, f))
        throw validation_error("orbit is not Frobenius-stable");
    return phi;
}

std::vector<InertialParam> enumerate_inertial_params(const RootDatum& rd,
                                                     const FrobeniusDescriptor& f,
                                                     const WeylGroup& w0, long long n,
                                                     Lambda lambda) {
    std::vector<InertialParam> out;
    for (const auto& rep : enumerate_F_stable_orbits(rd, f, w0, n, lambda))
        out.push_back(InertialParam{rep, lambda, class_order(rep)});
    return out;
}

std::vector<InertialParam> refine_to_ql(const InertialParam& phi, const RootDatum& rd,
                                        const FrobeniusDescriptor& f, const WeylGroup& w0,
                                        long long n) {
    if (phi.lambda != Lambda::Zlbar)
        throw validation_error("refinement expects a Zlbar parameter");
    if (!f.ell)
        throw validation_error("refinement needs ell");
    if (n % f.p == 0)
        throw validation_error("p divides N");
    std::vector<InertialParam> out;
    for (const auto& rep : enumerate_F_stable_orbits(rd, f, w0, n, Lambda::Qlbar)) {
        RatVec regular = canonical_rep(ell_regular_part(rep, *f.ell), w0.elements);
        if (regular == phi.rep)
            out.push_back(InertialParam{rep, Lambda::Qlbar, class_order(rep)});
    }
    return out;
}

bool centralizer_connected(const InertialParam& phi, const RootDatum& rd, const WeylGroup& w0) {
    Subgroup stab = stabilizer(phi.rep, w0.elements, rd);
    Subgroup fixing = fixing_reflection_subgroup(phi.rep, rd);
    return stab.elements == fixing.elements;
}

bool connectedness_is_proxy(const RootDatum& rd) {
    if (rd.simple.empty())
        return false;
    IntRowMat cols(static_cast<size_t>(rd.rank),
                   std::vector<long long>(rd.simple.size(), 0));
    for (size_t k = 0; k < rd.simple.size(); ++k) {
        const auto& root = rd.simple_root(static_cast<int>(k));
        for (int i = 0; i < rd.rank; ++i)
            cols[static_cast<size_t>(i)][k] = root[static_cast<size_t>(i)];
    }
    for (long long d : smith_normal_form(cols).diagonal)
        if (d > 1)
            return true;
    return false;
}

std::vector<InertialParam> twisted_torus_params(const RootDatum& rd, const FrobeniusDescriptor& f,
                                                const WeylGroup& w0, const IntMat& w, long long n) {
    if (!std::binary_search(w0.elements.begin(), w0.elements.end(), w))
        throw validation_error("twist is not a Weyl group element");
    if (n % f.p == 0)
        throw validation_error("p divides N");
    std::set<RatVec, bool (*)(const RatVec&, const RatVec&)> reps(lex_less);
    std::vector<InertialParam> out;
    for (const auto& v : all_level_vectors(rd.rank, n)) {
        RatVec img = mod1(mat_vec(w, frobenius_image(v, f)));
        if (img != mod1(v))
            continue;
        if (!order_invertible(class_order(v), f, f.lambda))
            continue;
        RatVec rep = canonical_rep(v, w0.elements);
        if (reps.insert(rep).second)
            out.push_back(InertialParam{rep, f.lambda, class_order(rep)});
    }
    std::sort(out.begin(), out.end(),
              [](const InertialParam& a, const InertialParam& b) { return lex_less(a.rep, b.rep); });
    return out;
}

TorusDecomposition torus_theta_decomposition(int rank, const IntMat& theta) {
    matrix_order(theta); // throws bound_error when the order is not (reasonably) finite

    IntRowMat a(static_cast<size_t>(rank), std::vector<long long>(static_cast<size_t>(rank), 0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (i == j ? 1 : 0) - theta.at(i, j);

    TorusDecomposition dec;
    dec.fixed_basis = integer_kernel(a);

    // Image lattice basis from U A V = D: A Z^n = U^{-1} D Z^n.
    SmithForm s = smith_normal_form(a);
    IntMat u(rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            u.at(i, j) = s.u[static_cast<size_t>(i)][static_cast<size_t>(j)];
    auto uinv = inverse_unimodular(u);
    if (!uinv)
        throw validation_error("Smith transform is not unimodular");
    for (int k = 0; k < rank; ++k) {
        long long d = static_cast<size_t>(k) < s.diagonal.size() ? s.diagonal[static_cast<size_t>(k)] : 0;
        if (d == 0)
            continue;
        std::vector<long long> col(static_cast<size_t>(rank));
        for (int i = 0; i < rank; ++i)
            col[static_cast<size_t>(i)] = d * uinv->at(i, k);
        dec.image_basis.push_back(std::move(col));
    }

    std::vector<std::vector<long long>> gens = dec.fixed_basis;
    gens.insert(gens.end(), dec.image_basis.begin(), dec.image_basis.end());
    dec.index = lattice_index(rank, gens);
    if (dec.index == 0)
        throw validation_error("fixed and image lattices do not span");
    return dec;
}

} // namespace tameblocks
