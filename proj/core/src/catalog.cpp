#include "ineqforge/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ineqforge/digest.hpp"

namespace ineqforge {

bool is_catalog_name(std::string_view name) noexcept {
  return std::find(kCatalogNames.begin(), kCatalogNames.end(), name) !=
         kCatalogNames.end();
}

template <typename Real>
Real IneqEvaluation<Real>::relative_margin() const {
  return min_margin() / std::max(scale, std::numeric_limits<Real>::min());
}

template <typename Real>
IneqEvaluation<Real> IneqEvaluation<Real>::one_sided(std::string_view name,
                                                     std::string digest, Real lhs,
                                                     Real rhs, Real scale) {
  IneqEvaluation e;
  e.name = std::string(name);
  e.inputs_digest = std::move(digest);
  e.lhs = lhs;
  e.rhs = rhs;
  e.margin_upper = rhs - lhs;
  e.scale = scale;
  e.holds = e.margin_upper >= -Tolerance::slack(scale);
  e.near_equality = e.margin_upper <= Real(Tolerance::kRel) * scale;
  return e;
}

template <typename Real>
IneqEvaluation<Real> IneqEvaluation<Real>::two_sided(std::string_view name,
                                                     std::string digest, Real lhs,
                                                     Real center, Real rhs, Real scale) {
  IneqEvaluation e;
  e.name = std::string(name);
  e.inputs_digest = std::move(digest);
  e.lhs = lhs;
  e.center = center;
  e.rhs = rhs;
  e.margin_lower = center - lhs;
  e.margin_upper = rhs - center;
  e.scale = scale;
  const Real slack = Tolerance::slack(scale);
  e.holds = *e.margin_lower >= -slack && e.margin_upper >= -slack;
  e.near_equality = e.min_margin() <= Real(Tolerance::kRel) * scale;
  return e;
}

namespace {

template <typename Real>
void require_real(const Space<Real>& space, std::string_view op) {
  if (!space.is_real()) {
    throw DomainError(std::string(op) + " is stated for real inner product spaces");
  }
}

template <typename Real>
void require_same_space(const Space<Real>& space, const OrthonormalFamily<Real>& fam) {
  if (!(fam.space() == space)) throw UsageError("family space mismatch");
}

template <typename Real>
Real sq(Real v) {
  return v * v;
}

/// a >= b up to the catalog slack at the given scale.
template <typename Real>
bool at_least(Real a, Real b, Real scale) {
  return a - b >= -Tolerance::slack(scale);
}

}  // namespace

template <typename Real>
Real cosine(const Space<Real>& space, const Vector<Real>& x, const Vector<Real>& y) {
  return inner(space, x, y).real() / (norm(space, x) * norm(space, y));
}

// ---------------------------------------------------------------------------

template <typename Real>
IneqEvaluation<Real> eval_schwarz(const Space<Real>& space, const Vector<Real>& x,
                                  const Vector<Real>& y) {
  const Real lhs = std::abs(inner(space, x, y));
  const Real n = norm(space, x) * norm(space, y);
  return IneqEvaluation<Real>::one_sided(names::kSchwarz, digest_of(space, x, y), lhs, n, n);
}

template <typename Real>
IneqEvaluation<Real> eval_precupanu_real(const Space<Real>& space,
                                         const Vector<Real>& a, const Vector<Real>& b,
                                         const Vector<Real>& x, const Vector<Real>& y) {
  require_real(space, "precupanu-1.1");
  require_nonzero(space, x, "x");
  require_nonzero(space, y, "y");
  const Real xa = inner(space, x, a).real();
  const Real xb = inner(space, x, b).real();
  const Real ya = inner(space, y, a).real();
  const Real yb = inner(space, y, b).real();
  const Real xy = inner(space, x, y).real();
  const Real ab = inner(space, a, b).real();
  const Real nx2 = sq(norm(space, x));
  const Real ny2 = sq(norm(space, y));
  const Real n = norm(space, a) * norm(space, b);
  const Real center = xa * xb / nx2 + ya * yb / ny2 - 2 * xa * yb * xy / (nx2 * ny2);
  return IneqEvaluation<Real>::two_sided(names::kPrecupanu, digest_of(space, a, b, x, y),
                                         (ab - n) / 2, center, (ab + n) / 2, n);
}

template <typename Real>
IneqEvaluation<Real> eval_richard(const Space<Real>& space, const Vector<Real>& a,
                                  const Vector<Real>& b, const Vector<Real>& x) {
  require_real(space, "richard-1.3");
  require_nonzero(space, x, "x");
  const Real xa = inner(space, x, a).real();
  const Real xb = inner(space, x, b).real();
  const Real ab = inner(space, a, b).real();
  const Real nx2 = sq(norm(space, x));
  const Real n = norm(space, a) * norm(space, b);
  return IneqEvaluation<Real>::two_sided(names::kRichard, digest_of(space, a, b, x),
                                         (ab - n) / 2 * nx2, xa * xb, (ab + n) / 2 * nx2,
                                         n * nx2);
}

template <typename Real>
IneqEvaluation<Real> eval_precupanu_self(const Space<Real>& space,
                                         const Vector<Real>& a, const Vector<Real>& x,
                                         const Vector<Real>& y) {
  require_real(space, "precupanu-self-1.5");
  require_nonzero(space, x, "x");
  require_nonzero(space, y, "y");
  const Real xa = inner(space, x, a).real();
  const Real ya = inner(space, y, a).real();
  const Real xy = inner(space, x, y).real();
  const Real nx2 = sq(norm(space, x));
  const Real ny2 = sq(norm(space, y));
  const Real na2 = sq(norm(space, a));
  const Real center = xa * xa / nx2 + ya * ya / ny2 - 2 * xa * ya * xy / (nx2 * ny2);
  return IneqEvaluation<Real>::two_sided(names::kPrecupanuSelf, digest_of(space, a, x, y),
                                         Real(0), center, na2, na2);
}

template <typename Real>
IneqEvaluation<Real> eval_angle_bound(const Space<Real>& space, const Vector<Real>& a,
                                      const Vector<Real>& x, const Vector<Real>& y) {
  require_real(space, "angle-1.6");
  require_nonzero(space, a, "a");
  require_nonzero(space, x, "x");
  require_nonzero(space, y, "y");
  const Real cxa = cosine(space, x, a);
  const Real cya = cosine(space, y, a);
  const Real bound = sq(cxa + cya) / 2 - Real(1.5);
  return IneqEvaluation<Real>::two_sided(names::kAngle, digest_of(space, a, x, y), bound,
                                         cosine(space, x, y), Real(1), Real(1));
}

template <typename Real>
Real moore_coefficient(Real eps) {
  if (!(eps >= Real(0))) throw UsageError("moore_coefficient needs eps >= 0");
  return std::max({Real(1) - eps - std::sqrt(2 * eps), Real(1) - 4 * eps, Real(0)});
}

template <typename Real>
PremiseCheck<Real> verify_moore(const Space<Real>& space, const Vector<Real>& x,
                                const Vector<Real>& y, const Vector<Real>& z, Real eps) {
  require_real(space, "moore-1.9");
  require_nonzero(space, x, "x");
  require_nonzero(space, y, "y");
  require_nonzero(space, z, "z");
  const Real coef = moore_coefficient(eps);
  const Real nx = norm(space, x), ny = norm(space, y), nz = norm(space, z);
  PremiseCheck<Real> out;
  out.premises_hold =
      at_least(std::abs(inner(space, x, y)), (1 - eps) * nx * ny, nx * ny) &&
      at_least(std::abs(inner(space, x, z)), (1 - eps) * nx * nz, nx * nz);
  out.conclusion = IneqEvaluation<Real>::one_sided(
      names::kMoore, digest_of(space, x, y, z), coef * ny * nz,
      std::abs(inner(space, y, z)), ny * nz);
  return out;
}

template <typename Real>
Bounds<Real> precupanu_moore_bounds(Real eps1) {
  if (!(eps1 > Real(0))) throw UsageError("precupanu_moore_bounds needs eps1 > 0");
  return {2 * eps1 * eps1 - 1, 2 * eps1 * eps1 + 1};
}

template <typename Real>
PrecupanuMooreCheck<Real> verify_precupanu_moore(const Space<Real>& space,
                                                 const Vector<Real>& a,
                                                 const Vector<Real>& b,
                                                 const Vector<Real>& x,
                                                 const MooreParams<Real>& params) {
  require_real(space, "precupanu-moore-1.12");
  if (!params.eps1 || !params.eps2) throw UsageError("precupanu-moore needs eps1 and eps2");
  const Real e1 = *params.eps1, e2 = *params.eps2;
  if (!(e1 > Real(0) && e1 < e2)) throw UsageError("precupanu-moore needs 0 < eps1 < eps2");
  require_nonzero(space, a, "a");
  require_nonzero(space, b, "b");
  require_nonzero(space, x, "x");
  const Real na = norm(space, a), nb = norm(space, b), nx = norm(space, x);
  const Real xa = inner(space, x, a).real();
  const Real xb = inner(space, x, b).real();
  const Real ab = inner(space, a, b).real();
  const Real n = na * nb;
  const auto window = [&](Real v, Real scale) {
    return at_least(v, e1 * scale, scale) && at_least(e2 * scale, v, scale);
  };
  PrecupanuMooreCheck<Real> out;
  out.premises_hold = window(xa, nx * na) && window(xb, nx * nb);
  const auto bounds = precupanu_moore_bounds(e1);
  const std::string digest = digest_of(space, a, b, x);
  out.conclusion = IneqEvaluation<Real>::two_sided(names::kPrecupanuMoore, digest,
                                                   bounds.lower * n, ab, bounds.upper * n, n);
  if (e1 <= Real(1)) {
    out.refinement = IneqEvaluation<Real>::two_sided(
        std::string(names::kPrecupanuMoore) + "/refinement", digest, -n, bounds.lower * n,
        ab, n);
  }
  return out;
}

template <typename Real>
IneqEvaluation<Real> eval_buzano(const Space<Real>& space, const Vector<Real>& a,
                                 const Vector<Real>& b, const Vector<Real>& x) {
  require_nonzero(space, x, "x");
  const Real lhs = std::abs(inner(space, x, a) * inner(space, x, b));
  const Real nx2 = sq(norm(space, x));
  const Real n = norm(space, a) * norm(space, b);
  const Real rhs = (n + std::abs(inner(space, a, b))) / 2 * nx2;
  return IneqEvaluation<Real>::one_sided(names::kBuzano, digest_of(space, a, b, x), lhs, rhs,
                                         n * nx2);
}

template <typename Real>
Real buzano_moore_coefficient(Real eps) {
  return 1 - 4 * eps + 2 * eps * eps;
}

template <typename Real>
BuzanoMooreCheck<Real> verify_buzano_moore(const Space<Real>& space,
                                           const Vector<Real>& x, const Vector<Real>& a,
                                           const Vector<Real>& b, Real eps) {
  if (!(eps > Real(0) && eps <= Real(1))) throw UsageError("buzano-moore needs eps in (0, 1]");
  require_nonzero(space, x, "x");
  require_nonzero(space, a, "a");
  require_nonzero(space, b, "b");
  const Real nx = norm(space, x), na = norm(space, a), nb = norm(space, b);
  BuzanoMooreCheck<Real> out;
  out.premises_hold =
      at_least(std::abs(inner(space, x, a)), (1 - eps) * nx * na, nx * na) &&
      at_least(std::abs(inner(space, x, b)), (1 - eps) * nx * nb, nx * nb);
  out.conclusion = IneqEvaluation<Real>::one_sided(
      names::kBuzanoMoore, digest_of(space, x, a, b),
      buzano_moore_coefficient(eps) * na * nb, std::abs(inner(space, a, b)), na * nb);
  out.useful = eps <= 1 - std::sqrt(Real(2)) / 2;
  return out;
}

template <typename Real>
PremiseCheck<Real> eval_theorem_1_5_i(const Space<Real>& space, const Vector<Real>& a,
                                      const Vector<Real>& x, const Vector<Real>& y,
                                      Real delta1, Real delta2) {
  require_real(space, "t1.5-i");
  const auto in_unit = [](Real d) { return d > Real(0) && d <= Real(1); };
  if (!in_unit(delta1) || !in_unit(delta2)) throw UsageError("t1.5-i needs delta in (0, 1]");
  if (!(delta1 + delta2 >= Real(1))) throw UsageError("t1.5-i needs delta1 + delta2 >= 1");
  require_nonzero(space, a, "a");
  require_nonzero(space, x, "x");
  require_nonzero(space, y, "y");
  PremiseCheck<Real> out;
  out.premises_hold = at_least(cosine(space, x, a), delta1, Real(1)) &&
                      at_least(cosine(space, y, a), delta2, Real(1));
  out.conclusion = IneqEvaluation<Real>::one_sided(
      names::kT15i, digest_of(space, a, x, y), sq(delta1 + delta2) / 2 - Real(1.5),
      cosine(space, x, y), Real(1));
  return out;
}

template <typename Real>
Theorem15iiCheck<Real> eval_theorem_1_5_ii(const Space<Real>& space,
                                           const Vector<Real>& a, const Vector<Real>& b,
                                           const Vector<Real>& x, std::optional<Real> mu1,
                                           std::optional<Real> mu2) {
  require_real(space, "t1.5-ii");
  if (!mu1 && !mu2) throw UsageError("t1.5-ii needs mu1 or mu2");
  if (mu1 && !(*mu1 >= Real(0) && *mu1 <= Real(1))) throw UsageError("t1.5-ii needs 0 <= mu1 <= 1");
  if (mu2 && !(*mu2 >= Real(-1) && *mu2 <= Real(0))) throw UsageError("t1.5-ii needs -1 <= mu2 <= 0");
  require_nonzero(space, a, "a");
  require_nonzero(space, b, "b");
  require_nonzero(space, x, "x");
  const Real n = norm(space, a) * norm(space, b);
  const Real p = inner(space, x, a).real() * inner(space, x, b).real() / sq(norm(space, x));
  const Real cab = cosine(space, a, b);
  const std::string digest = digest_of(space, a, b, x);
  Theorem15iiCheck<Real> out;
  if (mu1) {
    PremiseCheck<Real> lower;
    lower.premises_hold = at_least(p, *mu1 * n, n);
    lower.conclusion = IneqEvaluation<Real>::one_sided(std::string(names::kT15ii) + "/lower",
                                                       digest, 2 * *mu1 - 1, cab, Real(1));
    out.lower = std::move(lower);
  }
  if (mu2) {
    PremiseCheck<Real> upper;
    upper.premises_hold = at_least(*mu2 * n, p, n);
    upper.conclusion = IneqEvaluation<Real>::one_sided(std::string(names::kT15ii) + "/upper",
                                                       digest, cab, 2 * *mu2 + 1, Real(1));
    out.upper = std::move(upper);
  }
  return out;
}

// ---------------------------------------------------------------------------

template <typename Real>
std::complex<Real> generalized_sum(const OrthonormalFamily<Real>& e,
                                   const OrthonormalFamily<Real>& f,
                                   const Vector<Real>& x, const Vector<Real>& y) {
  const auto& space = e.space();
  using C = std::complex<Real>;
  std::vector<C> xe, fy;
  xe.reserve(e.size());
  fy.reserve(f.size());
  C sum(0, 0);
  for (const auto& ei : e.members()) {
    xe.push_back(inner(space, x, ei));
    sum += xe.back() * inner(space, ei, y);
  }
  for (const auto& fj : f.members()) {
    fy.push_back(inner(space, fj, y));
    sum += inner(space, x, fj) * fy.back();
  }
  C cross(0, 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      cross += xe[i] * fy[j] * inner(space, e.members()[i], f.members()[j]);
    }
  }
  return sum - Real(2) * cross;
}

template <typename Real>
std::complex<Real> generalized_deviation_by_reflection(const OrthonormalFamily<Real>& e,
                                                       const OrthonormalFamily<Real>& f,
                                                       const Vector<Real>& x,
                                                       const Vector<Real>& y) {
  const Vector<Real> u = reflection(e, x);
  const Vector<Real> v = reflection(f, y);
  return -inner(e.space(), u, v) / Real(2);
}

namespace {

template <typename Real>
std::complex<Real> checked_sum(const Space<Real>& space, const OrthonormalFamily<Real>& e,
                               const OrthonormalFamily<Real>& f, const Vector<Real>& x,
                               const Vector<Real>& y) {
  require_same_space(space, e);
  require_same_space(space, f);
  require_nonzero(space, x, "x");
  require_nonzero(space, y, "y");
  const std::complex<Real> s = generalized_sum(e, f, x, y);
  const std::complex<Real> dev = generalized_deviation_by_reflection(e, f, x, y);
  const std::complex<Real> direct = s - inner(space, x, y) / Real(2);
  const Real n = norm(space, x) * norm(space, y);
  if (std::abs(direct - dev) > Real(1e-10) * n) {
    throw ConsistencyError("direct summation and reflection identity disagree");
  }
  return s;
}

}  // namespace

template <typename Real>
IneqEvaluation<Real> eval_generalized(const Space<Real>& space,
                                      const OrthonormalFamily<Real>& e,
                                      const OrthonormalFamily<Real>& f,
                                      const Vector<Real>& x, const Vector<Real>& y) {
  const std::complex<Real> s = checked_sum(space, e, f, x, y);
  const Real n = norm(space, x) * norm(space, y);
  const Real lhs = std::abs(s - inner(space, x, y) / Real(2));
  return IneqEvaluation<Real>::one_sided(names::kGeneralized, digest_of(space, e, f, x, y),
                                         lhs, n / 2, n);
}

template <typename Real>
ChainEvaluation<Real> eval_chain(const Space<Real>& space, const OrthonormalFamily<Real>& e,
                                 const OrthonormalFamily<Real>& f, const Vector<Real>& x,
                                 const Vector<Real>& y) {
  const std::complex<Real> s = checked_sum(space, e, f, x, y);
  const std::complex<Real> xy = inner(space, x, y);
  const Real n = norm(space, x) * norm(space, y);
  const Real middle = std::abs(xy) / 2 + std::abs(s - xy / Real(2));
  const std::string digest = digest_of(space, e, f, x, y);
  const std::string base(names::kChain);
  return {IneqEvaluation<Real>::one_sided(base + "/1", digest, std::abs(s), middle, n),
          IneqEvaluation<Real>::one_sided(base + "/2", digest, middle,
                                          (std::abs(xy) + n) / 2, n)};
}

template <typename Real>
IneqEvaluation<Real> eval_real_family_double(const Space<Real>& space,
                                             const OrthonormalFamily<Real>& e,
                                             const OrthonormalFamily<Real>& f,
                                             const Vector<Real>& x, const Vector<Real>& y) {
  require_real(space, "real-double-2.14");
  const Real s = checked_sum(space, e, f, x, y).real();
  const Real xy = inner(space, x, y).real();
  const Real n = norm(space, x) * norm(space, y);
  return IneqEvaluation<Real>::two_sided(names::kRealDouble, digest_of(space, e, f, x, y),
                                         (xy - n) / 2, s, (xy + n) / 2, n);
}

// ---------------------------------------------------------------------------

template <typename Real>
KurepaEvaluation<Real> eval_kurepa(const Space<Real>& space, const Vector<Real>& a,
                                   const ComplexifiedVector<Real>& z) {
  require_real(space, "kurepa-3.2");
  require_nonzero(space, a, "a");
  const auto lifted = ComplexifiedVector<Real>::embed(a);
  const Real az2 = std::norm(complexify_inner(space, lifted, z));
  const Real zz = std::abs(complexify_inner(space, z, conjugate(z)));
  const Real na2 = sq(norm(space, a));
  const Real nz2 = sq(complexified_norm(space, z));
  const Real middle = na2 * (nz2 + zz) / 2;
  const std::string digest = digest_of(space, a, z);
  const std::string base(names::kKurepa);
  const Real scale = na2 * nz2;
  return {IneqEvaluation<Real>::one_sided(base + "/1", digest, az2, middle, scale),
          IneqEvaluation<Real>::one_sided(base + "/2", digest, middle, na2 * nz2, scale)};
}

template <typename Real>
KurepaRefinedEvaluation<Real> eval_kurepa_refined(const Space<Real>& space,
                                                  const OrthonormalFamily<Real>& e,
                                                  const OrthonormalFamily<Real>& f,
                                                  const ComplexifiedVector<Real>& w) {
  require_real(space, "kurepa-refined-3.3");
  require_same_space(space, e);
  require_same_space(space, f);
  using C = std::complex<Real>;
  std::vector<C> we, wf;
  C sigma(0, 0);
  for (const auto& ei : e.members()) {
    we.push_back(complexify_inner(space, w, ComplexifiedVector<Real>::embed(ei)));
    sigma += we.back() * we.back();
  }
  for (const auto& fj : f.members()) {
    wf.push_back(complexify_inner(space, w, ComplexifiedVector<Real>::embed(fj)));
    sigma += wf.back() * wf.back();
  }
  C cross(0, 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      cross += we[i] * wf[j] * inner(space, e.members()[i], f.members()[j]).real();
    }
  }
  sigma -= Real(2) * cross;
  const C q = complexify_inner(space, w, conjugate(w));
  const Real n2 = sq(complexified_norm(space, w));
  const Real link1 = std::abs(q) / 2 + std::abs(sigma - q / Real(2));
  const Real link2 = (n2 + std::abs(q)) / 2;
  const std::string digest = digest_of(space, e, f, w);
  const std::string base(names::kKurepaRefined);
  return {IneqEvaluation<Real>::one_sided(base + "/1", digest, std::abs(sigma), link1, n2),
          IneqEvaluation<Real>::one_sided(base + "/2", digest, link1, link2, n2),
          IneqEvaluation<Real>::one_sided(base + "/3", digest, link2, n2, n2)};
}

#define INEQFORGE_INSTANTIATE(R)                                                        \
  template struct IneqEvaluation<R>;                                                    \
  template R cosine(const Space<R>&, const Vector<R>&, const Vector<R>&);               \
  template IneqEvaluation<R> eval_schwarz(const Space<R>&, const Vector<R>&,            \
                                          const Vector<R>&);                            \
  template IneqEvaluation<R> eval_precupanu_real(const Space<R>&, const Vector<R>&,     \
                                                 const Vector<R>&, const Vector<R>&,    \
                                                 const Vector<R>&);                     \
  template IneqEvaluation<R> eval_richard(const Space<R>&, const Vector<R>&,            \
                                          const Vector<R>&, const Vector<R>&);          \
  template IneqEvaluation<R> eval_precupanu_self(const Space<R>&, const Vector<R>&,     \
                                                 const Vector<R>&, const Vector<R>&);   \
  template IneqEvaluation<R> eval_angle_bound(const Space<R>&, const Vector<R>&,        \
                                              const Vector<R>&, const Vector<R>&);      \
  template R moore_coefficient(R);                                                      \
  template PremiseCheck<R> verify_moore(const Space<R>&, const Vector<R>&,              \
                                        const Vector<R>&, const Vector<R>&, R);         \
  template Bounds<R> precupanu_moore_bounds(R);                                         \
  template PrecupanuMooreCheck<R> verify_precupanu_moore(                               \
      const Space<R>&, const Vector<R>&, const Vector<R>&, const Vector<R>&,            \
      const MooreParams<R>&);                                                           \
  template IneqEvaluation<R> eval_buzano(const Space<R>&, const Vector<R>&,             \
                                         const Vector<R>&, const Vector<R>&);           \
  template R buzano_moore_coefficient(R);                                               \
  template BuzanoMooreCheck<R> verify_buzano_moore(const Space<R>&, const Vector<R>&,   \
                                                   const Vector<R>&, const Vector<R>&,  \
                                                   R);                                  \
  template PremiseCheck<R> eval_theorem_1_5_i(const Space<R>&, const Vector<R>&,        \
                                              const Vector<R>&, const Vector<R>&, R, R);\
  template Theorem15iiCheck<R> eval_theorem_1_5_ii(const Space<R>&, const Vector<R>&,   \
                                                   const Vector<R>&, const Vector<R>&,  \
                                                   std::optional<R>, std::optional<R>); \
  template std::complex<R> generalized_sum(const OrthonormalFamily<R>&,                 \
                                           const OrthonormalFamily<R>&,                 \
                                           const Vector<R>&, const Vector<R>&);         \
  template std::complex<R> generalized_deviation_by_reflection(                         \
      const OrthonormalFamily<R>&, const OrthonormalFamily<R>&, const Vector<R>&,       \
      const Vector<R>&);                                                                \
  template IneqEvaluation<R> eval_generalized(const Space<R>&,                          \
                                              const OrthonormalFamily<R>&,              \
                                              const OrthonormalFamily<R>&,              \
                                              const Vector<R>&, const Vector<R>&);      \
  template ChainEvaluation<R> eval_chain(const Space<R>&, const OrthonormalFamily<R>&,  \
                                         const OrthonormalFamily<R>&, const Vector<R>&, \
                                         const Vector<R>&);                             \
  template IneqEvaluation<R> eval_real_family_double(                                   \
      const Space<R>&, const OrthonormalFamily<R>&, const OrthonormalFamily<R>&,        \
      const Vector<R>&, const Vector<R>&);                                              \
  template KurepaEvaluation<R> eval_kurepa(const Space<R>&, const Vector<R>&,           \
                                           const ComplexifiedVector<R>&);               \
  template KurepaRefinedEvaluation<R> eval_kurepa_refined(                              \
      const Space<R>&, const OrthonormalFamily<R>&, const OrthonormalFamily<R>&,        \
      const ComplexifiedVector<R>&);

INEQFORGE_INSTANTIATE(double)
INEQFORGE_INSTANTIATE(long double)

#undef INEQFORGE_INSTANTIATE

}  // namespace ineqforge
