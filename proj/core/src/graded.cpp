#include "segre/graded.hpp"

#include <stdexcept>

#include "segre/epsilon.hpp"

namespace segre {

namespace {

Matrix unit(std::size_t size, std::size_t r, std::size_t c) {
  Matrix m(size, size);
  m.at(r, c) = 1;
  return m;
}

Matrix embed_block(std::size_t size, const Matrix& b) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.at(i, j) = b.at(i, j);
  return m;
}

// Small deterministic generator for rational test data.
struct Lcg {
  unsigned long state;
  explicit Lcg(unsigned long seed) : state(seed) {}
  long next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long>((state >> 33) % 7) - 3;  // in [-3, 3]
  }
};

}  // namespace

GradedAlgebra::GradedAlgebra(std::size_t n) : n_(n) {
  if (n < 2) throw std::invalid_argument("graded algebra: n >= 2 required");
  const std::size_t s = n + 2;

  // g_{-1}: F_{ia} = E_{2+i, a}.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a) {
      basis_.push_back(unit(s, 2 + i, a));
      grade_.push_back(-1);
    }
  // g_0: sl(2) part.
  Matrix h(s, s);
  h.at(0, 0) = 1;
  h.at(1, 1) = -1;
  basis_.push_back(h);
  basis_.push_back(unit(s, 0, 1));
  basis_.push_back(unit(s, 1, 0));
  grade_.insert(grade_.end(), 3, 0);
  // g_0: gl(n) off-diagonal, then diagonal differences.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      basis_.push_back(unit(s, 2 + i, 2 + j));
      grade_.push_back(0);
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix d(s, s);
    d.at(2 + i, 2 + i) = 1;
    d.at(3 + i, 3 + i) = -1;
    basis_.push_back(d);
    grade_.push_back(0);
  }
  // Grading element: diag(n, n, -2, ..., -2) / (n+2); acts by j on g_j.
  Matrix e(s, s);
  for (std::size_t k = 0; k < s; ++k)
    e.at(k, k) = (k < 2) ? rat(static_cast<long>(n), static_cast<long>(s))
                         : rat(-2, static_cast<long>(s));
  basis_.push_back(e);
  grade_.push_back(0);
  // g_1: Z_{ia} = E_{a, 2+i}, trace-dual to F_{ia}.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a) {
      basis_.push_back(unit(s, a, 2 + i));
      grade_.push_back(1);
    }

  // Exact solver for the diagonal part: columns are the diagonals of
  // [h, D_1, ..., D_{n-1}, grading element]; full column rank, so the
  // normal-equation inverse is exact.
  Matrix diag_cols(s, n + 1);
  for (std::size_t k = 0; k < s; ++k) {
    diag_cols.at(k, 0) = h.at(k, k);
    for (std::size_t i = 0; i + 1 < n; ++i)
      diag_cols.at(k, 1 + i) = basis_[g0_end() - n + i].at(k, k);
    diag_cols.at(k, n) = e.at(k, k);
  }
  const Matrix gram = diag_cols.transpose() * diag_cols;
  diag_solver_ = *inverse(gram) * diag_cols.transpose();

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < 2; ++a) {
      const Matrix& f = basis_[f_index(i, a)];
      const Matrix& z = basis_[z_index(i, a)];
      Matrix mf(dim(), dim()), mz(dim(), dim());
      for (std::size_t k = 0; k < dim(); ++k) {
        const Matrix cf = coords(bracket(f, basis_[k]));
        const Matrix cz = coords(bracket(z, basis_[k]));
        for (std::size_t r = 0; r < dim(); ++r) {
          mf.at(r, k) = cf.at(r, 0);
          mz.at(r, k) = cz.at(r, 0);
        }
      }
      ad_f_.push_back(std::move(mf));
      ad_z_.push_back(std::move(mz));
    }
}

Matrix GradedAlgebra::canonical(const Matrix& m) const {
  if (m.rows() != size() || m.cols() != size())
    throw std::invalid_argument("canonical: wrong matrix size");
  const Rational t = m.trace() / Rational(static_cast<long>(size()));
  Matrix r = m;
  for (std::size_t k = 0; k < size(); ++k) r.at(k, k) -= t;
  return r;
}

Matrix GradedAlgebra::bracket(const Matrix& a, const Matrix& b) const {
  return a * b - b * a;
}

Matrix GradedAlgebra::coords(const Matrix& m) const {
  const Matrix c = canonical(m);
  const std::size_t s = size();
  Matrix out(dim(), 1);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t a = 0; a < 2; ++a) {
      out.at(f_index(i, a), 0) = c.at(2 + i, a);
      out.at(z_index(i, a), 0) = c.at(a, 2 + i);
    }
  std::size_t k = g0_begin();
  out.at(k + 1, 0) = c.at(0, 1);
  out.at(k + 2, 0) = c.at(1, 0);
  std::size_t off = k + 3;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      if (i == j) continue;
      out.at(off++, 0) = c.at(2 + i, 2 + j);
    }
  Matrix d(s, 1);
  for (std::size_t r = 0; r < s; ++r) d.at(r, 0) = c.at(r, r);
  const Matrix dc = diag_solver_ * d;
  out.at(k, 0) = dc.at(0, 0);
  for (std::size_t i = 0; i + 1 < n_; ++i) out.at(off + i, 0) = dc.at(1 + i, 0);
  out.at(g0_end() - 1, 0) = dc.at(n_, 0);
  return out;
}

Matrix GradedAlgebra::from_coords(const Matrix& c) const {
  if (c.rows() != dim() || c.cols() != 1)
    throw std::invalid_argument("from_coords: wrong coordinate size");
  Matrix m(size(), size());
  for (std::size_t k = 0; k < dim(); ++k)
    if (c.at(k, 0) != 0) m = m + basis_[k] * c.at(k, 0);
  return m;
}

std::map<std::string, Subalgebra> subalgebras(const GradedAlgebra& alg) {
  const std::size_t n = alg.n(), s = alg.size();
  std::map<std::string, Subalgebra> out;

  auto gl_n_part = [&] {
    std::vector<Matrix> b;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) b.push_back(unit(s, 2 + i, 2 + j));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Matrix d(s, s);
      d.at(2 + i, 2 + i) = 1;
      d.at(3 + i, 3 + i) = -1;
      b.push_back(d);
    }
    return b;
  };
  auto g1_part = [&] {
    std::vector<Matrix> b;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < 2; ++a) b.push_back(unit(s, a, 2 + i));
    return b;
  };

  const Matrix h = [&] {
    Matrix m(s, s);
    m.at(0, 0) = 1;
    m.at(1, 1) = -1;
    return m;
  }();
  const Matrix e12 = unit(s, 0, 1), e21 = unit(s, 1, 0);
  const Matrix grading = alg.grading_element();

  auto assemble = [&](std::string name, std::vector<Matrix> levi_2x2,
                      bool with_g1, std::vector<Matrix> extra) {
    std::vector<Matrix> b = std::move(levi_2x2);
    b.push_back(grading);
    auto gl = gl_n_part();
    b.insert(b.end(), gl.begin(), gl.end());
    if (with_g1) {
      auto z = g1_part();
      b.insert(b.end(), z.begin(), z.end());
    }
    b.insert(b.end(), extra.begin(), extra.end());
    out.emplace(name, Subalgebra{name, std::move(b)});
  };

  assemble("p", {h, e12, e21}, true, {});
  assemble("q", {h, e12}, true, {});
  // p' keeps the second column of the lower-left block.
  std::vector<Matrix> y_part;
  for (std::size_t i = 0; i < n; ++i) y_part.push_back(unit(s, 2 + i, 1));
  assemble("p'", {h, e12}, true, std::move(y_part));
  assemble("g0", {h, e12, e21}, false, {});

  Subalgebra pplus{"p+", g1_part()};
  out.emplace("p+", std::move(pplus));

  // Twistor stabilizers: block-upper-triangular with 2x2 part commuting
  // with j^eps; computed as the kernel of A |-> [upper-left(A), j^eps] on p.
  const char* names[3] = {"r-", "r0", "r+"};
  for (int eps = -1; eps <= 1; ++eps) {
    const Matrix j = j_for(eps).block();
    const Subalgebra& p = out.at("p");
    // Stack [upper-left(A_k), j] as columns of a 4 x dim(p) system.
    Matrix cols(4, p.basis.size());
    for (std::size_t k = 0; k < p.basis.size(); ++k) {
      Matrix ul(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t c = 0; c < 2; ++c) ul.at(i, c) = p.basis[k].at(i, c);
      const Matrix br = ul * j - j * ul;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t c = 0; c < 2; ++c) cols.at(2 * i + c, k) = br.at(i, c);
    }
    std::vector<Matrix> stab;
    for (const Matrix& coeff : null_space(cols)) {
      Matrix m(s, s);
      for (std::size_t k = 0; k < p.basis.size(); ++k)
        if (coeff.at(k, 0) != 0) m = m + p.basis[k] * coeff.at(k, 0);
      stab.push_back(alg.canonical(m));
    }
    // Cross-check against the closed form span{grading, j^eps} + gl(n) + g1.
    std::vector<Matrix> closed = {grading, embed_block(s, j)};
    auto gl = gl_n_part();
    closed.insert(closed.end(), gl.begin(), gl.end());
    auto z = g1_part();
    closed.insert(closed.end(), z.begin(), z.end());
    std::vector<Matrix> stab_flat, closed_flat;
    for (const auto& m : stab) stab_flat.push_back(alg.coords(m));
    for (const auto& m : closed) closed_flat.push_back(alg.coords(m));
    if (!same_span(stab_flat, closed_flat))
      throw std::logic_error("stabilizer mismatch with closed block form");
    out.emplace(names[eps + 1], Subalgebra{names[eps + 1], std::move(closed)});
  }
  return out;
}

Matrix p_action_on_qstd(const Matrix& a, const Matrix& m) {
  const auto ai = inverse(a);
  if (!ai) throw std::invalid_argument("p_action_on_qstd: a is singular");
  return a * m * *ai;
}

QuotientModule::QuotientModule(const GradedAlgebra& alg,
                               std::vector<Matrix> sub_basis,
                               std::vector<Matrix> reps, std::string name)
    : alg_(&alg),
      name_(std::move(name)),
      sub_basis_(std::move(sub_basis)),
      reps_(std::move(reps)) {
  const std::size_t d = alg.dim();
  if (sub_basis_.size() + reps_.size() != d)
    throw std::invalid_argument("quotient: sub + reps must span the algebra");
  Matrix change(d, d);
  std::size_t col = 0;
  for (const auto& m : sub_basis_) {
    const Matrix c = alg.coords(m);
    for (std::size_t r = 0; r < d; ++r) change.at(r, col) = c.at(r, 0);
    ++col;
  }
  for (const auto& m : reps_) {
    const Matrix c = alg.coords(m);
    for (std::size_t r = 0; r < d; ++r) change.at(r, col) = c.at(r, 0);
    ++col;
  }
  const auto inv = inverse(change);
  if (!inv) throw std::invalid_argument("quotient: sub + reps are dependent");
  proj_rows_ = Matrix(reps_.size(), d);
  for (std::size_t r = 0; r < reps_.size(); ++r)
    for (std::size_t c = 0; c < d; ++c)
      proj_rows_.at(r, c) = inv->at(sub_basis_.size() + r, c);
}

Matrix QuotientModule::project(const Matrix& x) const {
  return proj_rows_ * alg_->coords(x);
}

Matrix QuotientModule::lift(const Matrix& rep_coords) const {
  if (rep_coords.rows() != dim() || rep_coords.cols() != 1)
    throw std::invalid_argument("lift: wrong coordinate size");
  Matrix m(alg_->size(), alg_->size());
  for (std::size_t k = 0; k < dim(); ++k)
    if (rep_coords.at(k, 0) != 0) m = m + reps_[k] * rep_coords.at(k, 0);
  return m;
}

Matrix QuotientModule::projected_ad(const Matrix& a) const {
  Matrix m(dim(), dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const Matrix c = project(alg_->bracket(a, reps_[k]));
    for (std::size_t r = 0; r < dim(); ++r) m.at(r, k) = c.at(r, 0);
  }
  return m;
}

namespace {

// 2x2 complement of span{id, j^eps} inside gl(2): for eps = -1 and 0 these
// are the shapes displayed by the stabilizer quotients; for eps = +1 the
// off-diagonal pair complements span{id, diag(1,-1)}.
std::vector<Matrix> levi_complement(int eps) {
  switch (eps) {
    case -1:
      return {Matrix::of({{1, 0}, {0, -1}}), Matrix::of({{0, 1}, {1, 0}})};
    case 0:
      return {Matrix::of({{1, 0}, {0, -1}}), Matrix::of({{0, 0}, {1, 0}})};
    case 1:
      return {Matrix::of({{0, 1}, {0, 0}}), Matrix::of({{0, 0}, {1, 0}})};
  }
  throw std::invalid_argument("levi_complement: bad eps");
}

}  // namespace

QuotientModule quotient_mod_r(const GradedAlgebra& alg, int eps) {
  auto subs = subalgebras(alg);
  const char* rname = eps < 0 ? "r-" : (eps == 0 ? "r0" : "r+");
  std::vector<Matrix> reps;
  for (const Matrix& u : levi_complement(eps))
    reps.push_back(embed_block(alg.size(), u));
  for (std::size_t i = 0; i < alg.n(); ++i)
    for (std::size_t a = 0; a < 2; ++a)
      reps.push_back(alg.basis()[alg.f_index(i, a)]);
  return QuotientModule(alg, subs.at(rname).basis, std::move(reps),
                        std::string("g/") + rname);
}

QuotientModule quotient_mod_q(const GradedAlgebra& alg) {
  auto subs = subalgebras(alg);
  std::vector<Matrix> reps;
  reps.push_back(unit(alg.size(), 1, 0));  // the c-entry of the 2x2 block
  for (std::size_t i = 0; i < alg.n(); ++i)
    for (std::size_t a = 0; a < 2; ++a)
      reps.push_back(alg.basis()[alg.f_index(i, a)]);
  return QuotientModule(alg, subs.at("q").basis, std::move(reps), "g/q");
}

QuotientModule quotient_mod_p(const GradedAlgebra& alg) {
  auto subs = subalgebras(alg);
  std::vector<Matrix> reps;
  for (std::size_t i = 0; i < alg.n(); ++i)
    for (std::size_t a = 0; a < 2; ++a)
      reps.push_back(alg.basis()[alg.f_index(i, a)]);
  return QuotientModule(alg, subs.at("p").basis, std::move(reps), "g/p");
}

TwistorStructure j_eps(const GradedAlgebra& alg, int eps) {
  QuotientModule quo = quotient_mod_r(alg, eps);
  const Matrix d = embed_block(alg.size(), j_for(eps).block());
  Matrix j(quo.dim(), quo.dim());
  for (std::size_t k = 0; k < quo.dim(); ++k) {
    const Matrix c = quo.project(quo.reps()[k] * d);
    for (std::size_t r = 0; r < quo.dim(); ++r) j.at(r, k) = c.at(r, 0);
  }
  return TwistorStructure{eps, std::move(quo), d, std::move(j)};
}

bool j_eps_well_defined(const GradedAlgebra& alg, int eps) {
  auto subs = subalgebras(alg);
  const char* rname = eps < 0 ? "r-" : (eps == 0 ? "r0" : "r+");
  const auto& rbasis = subs.at(rname).basis;
  std::vector<Matrix> r_flat;
  for (const auto& m : rbasis) r_flat.push_back(alg.coords(m));
  const Matrix d = embed_block(alg.size(), j_for(eps).block());
  // The subalgebra itself, and the center's representative d (= id * d).
  std::vector<Matrix> images;
  for (const auto& m : rbasis) images.push_back(alg.coords(m * d));
  images.push_back(alg.coords(d));
  for (const auto& c : images)
    if (!in_span(r_flat, c)) return false;
  return true;
}

bool invariance_check(const GradedAlgebra& alg, int eps) {
  const TwistorStructure tw = j_eps(alg, eps);
  for (const Matrix& a : tw.quo.sub_basis()) {
    const Matrix ad = tw.quo.projected_ad(a);
    if (!(ad * tw.j == tw.j * ad)) return false;
  }
  return true;
}

InvariantStructureReport invariant_structure_space(const GradedAlgebra& alg,
                                                   int eps) {
  const TwistorStructure tw = j_eps(alg, eps);
  const std::size_t d = tw.quo.dim();
  // Stack the commutation systems ad J - J ad = 0 over all of r^eps.
  std::vector<Matrix> ads;
  for (const Matrix& a : tw.quo.sub_basis()) ads.push_back(tw.quo.projected_ad(a));
  Matrix sys(ads.size() * d * d, d * d);
  std::size_t row = 0;
  for (const Matrix& m : ads) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j, ++row)
        for (std::size_t k = 0; k < d; ++k) {
          sys.at(row, k * d + j) += m.at(i, k);   // (M J)_{ij}
          sys.at(row, i * d + k) -= m.at(k, j);   // (J M)_{ij}
        }
  }
  const std::vector<Matrix> sol = null_space(sys);

  InvariantStructureReport rep;
  rep.commutant_dim = sol.size();
  const Matrix id_flat = Matrix::identity(d).flatten();
  const Matrix j_flat = tw.j.flatten();
  rep.contains_identity = in_span(sol, id_flat);
  rep.contains_j = in_span(sol, j_flat);
  rep.commutant_is_id_j_span =
      rep.commutant_dim == 2 && rep.contains_identity && rep.contains_j;
  if (rep.commutant_is_id_j_span) {
    // (alpha id + beta J)^2 = (alpha^2 + eps beta^2) id + 2 alpha beta J, so
    // J.J = eps id forces alpha beta = 0 and alpha^2 + eps beta^2 = eps.
    // eps = -1: only (alpha, beta) = (0, +-1). eps = +1: (0, +-1) plus the
    // scalar pair (+-1, 0). eps = 0: alpha = 0, beta free (the ray family).
    rep.unique_up_to_sign = (eps != 0);
    rep.ray_family = (eps == 0);
  }
  return rep;
}

NijenhuisIdentityReport nijenhuis_identities(const GradedAlgebra& alg, int eps) {
  const TwistorStructure tw = j_eps(alg, eps);
  const QuotientModule& quo = tw.quo;
  const Matrix& d = tw.d_block;

  auto s_term = [&](const Matrix& x, const Matrix& y, const Matrix& jx,
                    const Matrix& jy) {
    const Matrix t1 = quo.project((alg.bracket(x, y) * d) * d);
    const Matrix t2 = quo.project(alg.bracket(jx, jy));
    const Matrix t3 = quo.project(alg.bracket(jx, y) * d);
    const Matrix t4 = quo.project(alg.bracket(x, jy) * d);
    return -t1 - t2 + t3 + t4;
  };

  NijenhuisIdentityReport rep;
  rep.s_vanishes = true;
  rep.defects_cancel = true;
  rep.subidentities_separately = true;
  for (std::size_t p = 0; p < quo.dim(); ++p)
    for (std::size_t q = 0; q < quo.dim(); ++q) {
      const Matrix x = quo.reps()[p], y = quo.reps()[q];
      const Matrix jx = x * d, jy = y * d;
      const Matrix s = s_term(x, y, jx, jy);
      if (!s.is_zero()) rep.s_vanishes = false;
      const Matrix a_defect =
          quo.project((alg.bracket(x, y) * d) * d) - quo.project(alg.bracket(x, jy) * d);
      const Matrix b_defect =
          quo.project(alg.bracket(jx, jy)) - quo.project(alg.bracket(jx, y) * d);
      if (!a_defect.is_zero() || !b_defect.is_zero())
        rep.subidentities_separately = false;
      if (!(a_defect + b_defect).is_zero()) rep.defects_cancel = false;
    }

  // Re-run with representatives and J-lifts shifted by elements of r^eps.
  Lcg gen(0x5eed * (eps + 2) + alg.n());
  auto random_r = [&] {
    Matrix m(alg.size(), alg.size());
    for (const Matrix& b : quo.sub_basis()) m = m + b * Rational(gen.next());
    return m;
  };
  rep.lift_independent = true;
  for (std::size_t p = 0; p < quo.dim() && rep.lift_independent; ++p)
    for (std::size_t q = 0; q < quo.dim(); ++q) {
      const Matrix x = quo.reps()[p] + random_r();
      const Matrix y = quo.reps()[q] + random_r();
      const Matrix jx = x * d + random_r();
      const Matrix jy = y * d + random_r();
      if (!s_term(x, y, jx, jy).is_zero()) {
        rep.lift_independent = false;
        break;
      }
    }
  return rep;
}

InvariantComplementReport invariant_complement(const GradedAlgebra& alg, int eps) {
  const TwistorStructure tw = j_eps(alg, eps);
  const QuotientModule& quo = tw.quo;
  const std::size_t d = quo.dim(), nc = d - 2;  // 2 Levi reps, then g_{-1}

  // r0^eps = r^eps n g0: grading element, j^eps block, gl(n) part.
  std::vector<Matrix> r0;
  for (const Matrix& m : quo.sub_basis()) {
    bool in_g0 = true;
    for (std::size_t i = 0; i < 2 && in_g0; ++i)
      for (std::size_t j = 2; j < alg.size(); ++j)
        if (m.at(i, j) != 0) {
          in_g0 = false;
          break;
        }
    if (in_g0) r0.push_back(m);
  }

  InvariantComplementReport rep;

  // In representative coordinates the first two directions span p/r^eps and
  // the rest span the g_{-1} image; check every relevant operator is block
  // diagonal, then complements are graphs of f: g_{-1}-image -> p/r^eps and
  // invariance is the intertwiner equation f L = L' f.
  auto blocks_ok = [&](const Matrix& m) {
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 2; j < d; ++j)
        if (m.at(i, j) != 0) return false;
    for (std::size_t i = 2; i < d; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (m.at(i, j) != 0) return false;
    return true;
  };

  std::vector<Matrix> ops;  // ad of r0 on rep coords
  bool block_structure = blocks_ok(tw.j);
  for (const Matrix& a : r0) {
    Matrix ad = quo.projected_ad(a);
    block_structure = block_structure && blocks_ok(ad);
    ops.push_back(std::move(ad));
  }
  if (!block_structure) return rep;  // all flags false: unexpected geometry

  auto intertwiner_space = [&](const std::vector<Matrix>& mats) {
    // Unknown f is 2 x nc: rows of the system are (f L - L' f)_{rj} = 0.
    Matrix sys(mats.size() * 2 * nc, 2 * nc);
    std::size_t row = 0;
    for (const Matrix& m : mats) {
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t j = 0; j < nc; ++j, ++row) {
          for (std::size_t k = 0; k < nc; ++k)
            sys.at(row, r * nc + k) += m.at(2 + k, 2 + j);  // f L
          for (std::size_t k = 0; k < 2; ++k)
            sys.at(row, k * nc + j) -= m.at(r, k);          // L' f
        }
    }
    return null_space(sys);
  };

  rep.r0_complement_unique = intertwiner_space(ops).empty();
  // The basepoint complement is the g_{-1} image, so uniqueness pins it.
  rep.equals_g_minus_image = rep.r0_complement_unique;
  // J preserves the g_{-1}-image block by block_structure; record the size
  // of the family of complements invariant under J alone.
  rep.j_invariant = true;
  rep.j_only_family_dim = intertwiner_space({tw.j}).size();
  return rep;
}

bool ker_j0_projects_to_v(const GradedAlgebra& alg) {
  const TwistorStructure tw = j_eps(alg, 0);
  const std::vector<Matrix> ker = null_space(tw.j);
  const QuotientModule gq = quotient_mod_q(alg);

  std::vector<Matrix> image;
  for (const Matrix& kc : ker) image.push_back(gq.project(tw.quo.lift(kc)));

  // p'/q inside g/q: spanned by the projections of the Y-part E_{2+i, 1}.
  std::vector<Matrix> v_span;
  for (std::size_t i = 0; i < alg.n(); ++i)
    v_span.push_back(gq.project(alg.basis()[alg.f_index(i, 1)]));
  return same_span(image, v_span) && span_dimension(image) == alg.n();
}

StabilizerReport stabilizer_on_d(const GradedAlgebra& alg) {
  auto subs = subalgebras(alg);
  const auto& q = subs.at("q").basis;
  const QuotientModule gq = quotient_mod_q(alg);
  const Matrix e21 = unit(alg.size(), 1, 0);  // representative of p/q

  // chi(A) = coefficient of [A, e21] along e21 modulo q.
  StabilizerReport rep;
  Matrix chi(1, q.size());
  for (std::size_t k = 0; k < q.size(); ++k) {
    const Matrix c = gq.project(alg.bracket(q[k], e21));
    chi.at(0, k) = c.at(0, 0);
    // The action must stay inside p/q: no g_{-1} components.
    for (std::size_t r = 1; r < c.rows(); ++r)
      if (c.at(r, 0) != 0) return rep;
  }
  rep.character_nonzero = !chi.is_zero();

  std::vector<Matrix> kernel;
  for (const Matrix& coeff : null_space(chi)) {
    Matrix m(alg.size(), alg.size());
    for (std::size_t k = 0; k < q.size(); ++k)
      if (coeff.at(k, 0) != 0) m = m + q[k] * coeff.at(k, 0);
    kernel.push_back(alg.coords(m));
  }
  std::vector<Matrix> r0_flat;
  for (const Matrix& m : subs.at("r0").basis) r0_flat.push_back(alg.coords(m));
  rep.kernel_is_r0 = same_span(kernel, r0_flat);
  return rep;
}

Matrix scaling_element(const GradedAlgebra& alg,
                       const std::vector<Rational>& lambda_on_g0) {
  const std::size_t g0_dim = alg.g0_end() - alg.g0_begin();
  if (lambda_on_g0.size() != g0_dim)
    throw std::invalid_argument("scaling_element: functional has wrong size");
  const Matrix& e = alg.grading_element();
  const Rational e_norm = (e * e).trace();
  Matrix result(alg.size(), alg.size());
  Rational t = 0;
  for (std::size_t k = 0; k < g0_dim; ++k) {
    const Matrix& a = alg.basis()[alg.g0_begin() + k];
    const Rational pairing = (e * a).trace();
    if (pairing == 0) {
      if (lambda_on_g0[k] != 0)
        throw std::invalid_argument(
            "scaling_element: functional does not vanish on the semisimple part");
    } else {
      t = lambda_on_g0[k] / pairing;
    }
  }
  return e * t;
}

std::vector<Rational> grading_character(const GradedAlgebra& alg) {
  std::vector<Rational> lambda;
  const Matrix& e = alg.grading_element();
  for (std::size_t k = alg.g0_begin(); k < alg.g0_end(); ++k)
    lambda.push_back((e * alg.basis()[k]).trace());
  return lambda;
}

}  // namespace segre
