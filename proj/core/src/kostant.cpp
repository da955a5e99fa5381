#include "segre/kostant.hpp"

#include <array>
#include <stdexcept>

namespace segre {

KostantComplex::KostantComplex(const GradedAlgebra& alg) : alg_(&alg) {
  const std::size_t mm = m();
  pair_lookup_.assign(mm * mm, 0);
  for (std::size_t a = 0; a < mm; ++a)
    for (std::size_t b = a + 1; b < mm; ++b) {
      pair_lookup_[a * mm + b] = pair_of_.size();
      pair_of_.emplace_back(a, b);
    }
  for (std::size_t a = 0; a < mm; ++a)
    for (std::size_t b = a + 1; b < mm; ++b)
      for (std::size_t c = b + 1; c < mm; ++c)
        triple_of_.push_back({a, b, c});
}

std::size_t KostantComplex::pair_index(std::size_t a, std::size_t b) const {
  if (a >= b) throw std::invalid_argument("pair_index: need a < b");
  return pair_lookup_[a * m() + b];
}

Matrix KostantComplex::d1() const {
  const std::size_t dg = alg_->dim();
  Matrix out(pairs() * dg, m() * dg);
  for (std::size_t p = 0; p < pairs(); ++p) {
    const auto [a, b] = pair_of_[p];
    const Matrix &ada = alg_->ad_f(a), &adb = alg_->ad_f(b);
    for (std::size_t r = 0; r < dg; ++r)
      for (std::size_t k = 0; k < dg; ++k) {
        // (d phi)(Xa, Xb) = [Xa, phi(Xb)] - [Xb, phi(Xa)]
        if (ada.at(r, k) != 0) out.at(p * dg + r, b * dg + k) += ada.at(r, k);
        if (adb.at(r, k) != 0) out.at(p * dg + r, a * dg + k) -= adb.at(r, k);
      }
  }
  return out;
}

Matrix KostantComplex::d2() const {
  const std::size_t dg = alg_->dim();
  Matrix out(triples() * dg, pairs() * dg);
  for (std::size_t t = 0; t < triples(); ++t) {
    const auto [a, b, c] = triple_of_[t];
    const std::array<std::size_t, 3> idx = {a, b, c};
    const std::array<std::size_t, 3> omit_pairs = {
        pair_index(b, c), pair_index(a, c), pair_index(a, b)};
    for (std::size_t pos = 0; pos < 3; ++pos) {
      const Matrix& ad = alg_->ad_f(idx[pos]);
      const Rational sgn = (pos % 2 == 0) ? 1 : -1;
      for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t k = 0; k < dg; ++k)
          if (ad.at(r, k) != 0)
            out.at(t * dg + r, omit_pairs[pos] * dg + k) += sgn * ad.at(r, k);
    }
  }
  return out;
}

Matrix KostantComplex::c1() const {
  const std::size_t dg = alg_->dim();
  Matrix out(dg, m() * dg);
  for (std::size_t a = 0; a < m(); ++a) {
    const Matrix& ad = alg_->ad_z(a);
    for (std::size_t r = 0; r < dg; ++r)
      for (std::size_t k = 0; k < dg; ++k)
        if (ad.at(r, k) != 0) out.at(r, a * dg + k) += ad.at(r, k);
  }
  return out;
}

Matrix KostantComplex::c2() const {
  const std::size_t dg = alg_->dim();
  Matrix out(m() * dg, pairs() * dg);
  // (c phi)(Xg) = sum_a [Z^a, phi(Xa, Xg)], phi antisymmetric in its slots.
  for (std::size_t g = 0; g < m(); ++g)
    for (std::size_t a = 0; a < m(); ++a) {
      if (a == g) continue;
      const Matrix& ad = alg_->ad_z(a);
      const Rational sgn = (a < g) ? 1 : -1;
      const std::size_t p = (a < g) ? pair_index(a, g) : pair_index(g, a);
      for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t k = 0; k < dg; ++k)
          if (ad.at(r, k) != 0)
            out.at(g * dg + r, p * dg + k) += sgn * ad.at(r, k);
    }
  return out;
}

Matrix KostantComplex::c3() const {
  const std::size_t dg = alg_->dim();
  Matrix out(pairs() * dg, triples() * dg);
  for (std::size_t t = 0; t < triples(); ++t) {
    const auto [a, b, c] = triple_of_[t];
    // (c phi)(Xg, Xd) picks up [Z^e, phi(Xe, Xg, Xd)] for the slot omitted.
    struct Term {
      std::size_t contracted, g, d;
      int sign;
    };
    // phi(Xa,Xb,Xc): contracting the first slot of each cyclic arrangement.
    const std::array<Term, 3> terms = {{{a, b, c, +1}, {b, a, c, -1}, {c, a, b, +1}}};
    for (const Term& term : terms) {
      const Matrix& ad = alg_->ad_z(term.contracted);
      const std::size_t p = pair_index(term.g, term.d);
      for (std::size_t r = 0; r < dg; ++r)
        for (std::size_t k = 0; k < dg; ++k)
          if (ad.at(r, k) != 0)
            out.at(p * dg + r, t * dg + k) += Rational(term.sign) * ad.at(r, k);
    }
  }
  return out;
}

std::vector<std::size_t> KostantComplex::grade_indices(int grade) const {
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < alg_->dim(); ++k)
    if (alg_->grade(k) == grade) idx.push_back(k);
  return idx;
}

Matrix KostantComplex::embed2(const Matrix& restricted, int value_grade) const {
  const std::vector<std::size_t> idx = grade_indices(value_grade);
  const std::size_t dg = alg_->dim();
  Matrix full(pairs() * dg, 1);
  for (std::size_t p = 0; p < pairs(); ++p)
    for (std::size_t k = 0; k < idx.size(); ++k)
      full.at(p * dg + idx[k], 0) = restricted.at(p * idx.size() + k, 0);
  return full;
}

std::vector<Matrix> KostantComplex::harmonic2(int value_grade) const {
  const std::vector<std::size_t> idx = grade_indices(value_grade);
  if (idx.empty()) return {};
  const std::size_t dg = alg_->dim();
  const Matrix full_d2 = d2(), full_c2 = c2();
  // Column restriction to values in the grade; rows stay full.
  Matrix sys(full_d2.rows() + full_c2.rows(), pairs() * idx.size());
  for (std::size_t p = 0; p < pairs(); ++p)
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const std::size_t col_full = p * dg + idx[k];
      const std::size_t col = p * idx.size() + k;
      for (std::size_t r = 0; r < full_d2.rows(); ++r)
        if (full_d2.at(r, col_full) != 0) sys.at(r, col) = full_d2.at(r, col_full);
      for (std::size_t r = 0; r < full_c2.rows(); ++r)
        if (full_c2.at(r, col_full) != 0)
          sys.at(full_d2.rows() + r, col) = full_c2.at(r, col_full);
    }
  return null_space(sys);
}

BilinearMap KostantComplex::to_bilinear(const Matrix& full_coords) const {
  const std::size_t dg = alg_->dim(), n = alg_->n();
  BilinearMap phi = BilinearMap::vector(n);
  for (std::size_t p = 0; p < pairs(); ++p) {
    const auto [a, b] = pair_of_[p];
    for (std::size_t k = 0; k < dg; ++k) {
      const Rational& v = full_coords.at(p * dg + k, 0);
      if (v == 0) continue;
      if (alg_->grade(k) != -1)
        throw std::invalid_argument("to_bilinear: values must lie in g_{-1}");
      phi.vector_at(a, b, k) = v;       // g_{-1} index equals W index
      phi.vector_at(b, a, k) = -v;
    }
  }
  return phi;
}

Matrix KostantComplex::from_bilinear(const BilinearMap& phi) const {
  if (!phi.vector_valued() || phi.n() != alg_->n())
    throw std::invalid_argument("from_bilinear: shape mismatch");
  const std::size_t dg = alg_->dim();
  Matrix out(pairs() * dg, 1);
  for (std::size_t p = 0; p < pairs(); ++p) {
    const auto [a, b] = pair_of_[p];
    for (std::size_t k = 0; k < 2 * alg_->n(); ++k)
      out.at(p * dg + k, 0) = phi.vector_at(a, b, k);
  }
  return out;
}

Matrix KostantComplex::form_swap_u(const Matrix& full_coords) const {
  const std::size_t dg = alg_->dim(), mm = m();
  // Value at an arbitrary ordered slot pair, with antisymmetry.
  auto value_at = [&](std::size_t a, std::size_t b, std::size_t k) -> Rational {
    if (a == b) return 0;
    if (a < b) return full_coords.at(pair_lookup_[a * mm + b] * dg + k, 0);
    return -full_coords.at(pair_lookup_[b * mm + a] * dg + k, 0);
  };
  Matrix out(pairs() * dg, 1);
  for (std::size_t p = 0; p < pairs(); ++p) {
    const auto [x, y] = pair_of_[p];
    const std::size_t i = x / 2, a = x % 2, j = y / 2, b = y % 2;
    for (std::size_t k = 0; k < dg; ++k)
      out.at(p * dg + k, 0) = value_at(2 * i + b, 2 * j + a, k);
  }
  return out;
}

namespace {

// dim of the kernel of the natural contraction on sym (x) dual factors; the
// independent dimension oracle for the homogeneity-1 harmonic space.
std::size_t trace_kernel_s2u_ustar() {
  // Domain: t^{ab}_c symmetric in (a,b); map (tr t)^a = sum_b t^{ab}_b.
  std::vector<std::array<std::size_t, 2>> sym_pairs = {{0, 0}, {0, 1}, {1, 1}};
  Matrix tr(2, sym_pairs.size() * 2);
  for (std::size_t s = 0; s < sym_pairs.size(); ++s)
    for (std::size_t c = 0; c < 2; ++c) {
      const auto [a, b] = sym_pairs[s];
      // t^{ab}_c contributes to (tr)^a when b = c, and to (tr)^b when a = c.
      if (b == c) tr.at(a, s * 2 + c) += 1;
      if (a == c && a != b) tr.at(b, s * 2 + c) += 1;
    }
  return sym_pairs.size() * 2 - rank(tr);
}

std::size_t trace_kernel_l2v_v(std::size_t n) {
  // Domain: t_{ij}^k antisymmetric in (i,j); map (tr t)_i = sum_j t_{ij}^j.
  std::vector<std::pair<std::size_t, std::size_t>> alt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) alt.emplace_back(i, j);
  Matrix tr(n, alt.size() * n);
  for (std::size_t s = 0; s < alt.size(); ++s)
    for (std::size_t k = 0; k < n; ++k) {
      const auto [i, j] = alt[s];
      if (j == k) tr.at(i, s * n + k) += 1;
      if (i == k) tr.at(j, s * n + k) -= 1;  // t_{ji} = -t_{ij}
    }
  return alt.size() * n - rank(tr);
}

}  // namespace

HarmonicSummary kostant_harmonics(const GradedAlgebra& alg) {
  const KostantComplex kc(alg);
  HarmonicSummary s;

  const Matrix d1 = kc.d1(), d2 = kc.d2(), c1 = kc.c1(), c2 = kc.c2(), c3 = kc.c3();
  s.d_squared_zero = (d2 * d1).is_zero();
  s.c_squared_zero = (c1 * c2).is_zero() && (c2 * c3).is_zero();

  const std::vector<Matrix> hom1 = kc.harmonic2(-1);
  const std::vector<Matrix> hom2 = kc.harmonic2(0);
  const std::vector<Matrix> hom3 = kc.harmonic2(1);
  s.hom1_dim = hom1.size();
  s.hom2_dim = hom2.size();
  s.hom3_dim = hom3.size();

  s.hom1_oracle_dim = trace_kernel_s2u_ustar() * trace_kernel_l2v_v(alg.n());

  // Symmetry type and trace annihilation of the homogeneity-1 component.
  s.hom1_u_symmetric = true;
  s.hom1_traces_vanish = true;
  const std::size_t n = alg.n();
  for (const Matrix& h : hom1) {
    const Matrix full = kc.embed2(h, -1);
    if (!(kc.form_swap_u(full) == full)) s.hom1_u_symmetric = false;
    const BilinearMap phi = kc.to_bilinear(full);
    // U-trace: contract the first argument's R^2 index with the value's.
    for (std::size_t i = 0; i < n && s.hom1_traces_vanish; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t k = 0; k < n; ++k) {
            Rational acc = 0;
            for (std::size_t a = 0; a < 2; ++a)
              acc += phi.vector_at(w_index(i, a), w_index(j, b), w_index(k, a));
            if (acc != 0) {
              s.hom1_traces_vanish = false;
              break;
            }
          }
    // V-trace: contract the first argument's R^n index with the value's.
    for (std::size_t a = 0; a < 2 && s.hom1_traces_vanish; ++a)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t c = 0; c < 2; ++c) {
            Rational acc = 0;
            for (std::size_t i = 0; i < n; ++i)
              acc += phi.vector_at(w_index(i, a), w_index(j, b), w_index(i, c));
            if (acc != 0) {
              s.hom1_traces_vanish = false;
              break;
            }
          }
  }

  // n = 2: split homogeneity 2 by form symmetry and value block.
  if (alg.n() == 2 && !hom2.empty()) {
    const std::size_t dg = alg.dim();
    const auto g0_idx = kc.grade_indices(0);
    auto value_block_ok = [&](const Matrix& full, bool sl2) {
      for (std::size_t p = 0; p < kc.pairs(); ++p)
        for (std::size_t t = 0; t < g0_idx.size(); ++t) {
          const std::size_t k = g0_idx[t];
          const bool is_sl2 = (k >= alg.g0_begin() && k < alg.g0_begin() + 3);
          const bool is_grading = (k == alg.g0_end() - 1);
          const Rational& v = full.at(p * dg + k, 0);
          if (v == 0) continue;
          if (is_grading) return false;
          if (sl2 != is_sl2) return false;
        }
      return true;
    };
    std::vector<Matrix> k1, k2, flat;
    for (const Matrix& h : hom2) flat.push_back(kc.embed2(h, 0));
    bool clean = true;
    const Rational half = rat(1, 2);
    for (const Matrix& full : flat) {
      const Matrix sw = kc.form_swap_u(full);
      const Matrix sym = (full + sw) * half, alt = (full - sw) * half;
      if (!value_block_ok(sym, /*sl2=*/true)) clean = false;
      if (!value_block_ok(alt, /*sl2=*/false)) clean = false;
      if (!sym.is_zero()) k1.push_back(sym);
      if (!alt.is_zero()) k2.push_back(alt);
    }
    s.k1_dim = span_dimension(k1);
    s.k2_dim = span_dimension(k2);
    s.k_split_clean = clean && (s.k1_dim + s.k2_dim == s.hom2_dim);
  }
  return s;
}

BilinearMap phi_witness(const GradedAlgebra& alg) {
  if (alg.n() < 3) throw std::invalid_argument("phi_witness: needs n >= 3");
  BilinearMap phi = BilinearMap::vector(alg.n());
  // (X, Y) |-> (x_{11} y_{21} - y_{11} x_{21}) E_{32} in 1-based notation.
  phi.vector_at(w_index(0, 0), w_index(1, 0), w_index(2, 1)) = 1;
  phi.vector_at(w_index(1, 0), w_index(0, 0), w_index(2, 1)) = -1;
  return phi;
}

PhiCounterexampleReport phi_counterexample(const GradedAlgebra& alg) {
  const KostantComplex kc(alg);
  const BilinearMap phi = phi_witness(alg);
  const Matrix v = kc.from_bilinear(phi);

  PhiCounterexampleReport rep;
  rep.in_harmonic = (kc.d2() * v).is_zero() && (kc.c2() * v).is_zero();
  rep.type02_wrt_jplus = type_check(phi, j_plus(), PQType::t02);
  rep.part02_nonzero_wrt_jminus =
      !pq_parts(phi, EpsilonStructure::make(Matrix::of({{0, -1}, {1, 0}})))
           .p02.is_zero();
  rep.part02_nonzero_wrt_jzero =
      !part02_nilpotent(phi, EpsilonStructure::make(Matrix::of({{0, 0}, {1, 0}})))
           .is_zero();
  return rep;
}

namespace {

struct Lcg {
  unsigned long state;
  explicit Lcg(unsigned long seed) : state(seed) {}
  long next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 7) - 3;
  }
};

}  // namespace

TorsionReport no_invisible_torsion(const GradedAlgebra& alg, int eps,
                                   std::size_t extra_conjugates) {
  if (alg.n() < 3)
    throw std::invalid_argument("no_invisible_torsion: needs n >= 3");
  const KostantComplex kc(alg);
  const std::vector<Matrix> hom1 = kc.harmonic2(-1);
  if (hom1.empty()) return {true, true, 0};

  std::vector<BilinearMap> basis;
  for (const Matrix& h : hom1) basis.push_back(kc.to_bilinear(kc.embed2(h, -1)));

  // Conjugators in general position. Diagonal or permutation matrices are
  // useless here: they commute with j^+ or flip its sign, which repeats the
  // same linear condition, so the base family mixes all entries.
  std::vector<Matrix> family = {
      Matrix::identity(2),          Matrix::of({{1, 1}, {0, 1}}),
      Matrix::of({{1, 0}, {1, 1}}), Matrix::of({{2, 1}, {1, 1}}),
      Matrix::of({{1, 2}, {1, 3}}), Matrix::of({{3, 1}, {2, 1}})};
  Lcg gen(0xf00d + eps + alg.n());
  while (family.size() < 6 + extra_conjugates) {
    Matrix g(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) g.at(i, j) = Rational(gen.next());
    if (det(g) != 0) family.push_back(std::move(g));
  }

  auto intersection_empty = [&](std::size_t count) {
    const std::size_t flat = basis.front().values().size();
    Matrix sys(count * flat, basis.size());
    for (std::size_t f = 0; f < count; ++f) {
      const Matrix& g = family[f];
      const Matrix block = g * j_for(eps).block() * *inverse(g);
      const EpsilonStructure a = EpsilonStructure::make(block);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        const BilinearMap p02 = part02(basis[t], a);
        for (std::size_t k = 0; k < flat; ++k)
          sys.at(f * flat + k, t) = p02.values().flat(k);
      }
    }
    return null_space(sys).empty();
  };

  TorsionReport rep;
  rep.family_size = family.size();
  rep.intersection_zero = intersection_empty(6);
  rep.stable = intersection_empty(family.size()) == rep.intersection_zero;
  return rep;
}

}  // namespace segre
