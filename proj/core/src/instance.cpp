#include "ineqforge/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ineqforge/digest.hpp"

namespace ineqforge {

namespace {

constexpr std::uint32_t bits(std::initializer_list<int> idx) {
  std::uint32_t m = 0;
  for (int i : idx) m |= 1U << i;
  return m;
}

std::vector<EntryInfo> build_entries() {
  using namespace names;
  std::vector<EntryInfo> e;
  e.push_back({kSchwarz, true, {"x", "y"}, 0, false});
  e.push_back({kPrecupanu, false, {"a", "b", "x", "y"}, bits({2, 3}), false});
  e.push_back({kRichard, false, {"a", "b", "x"}, bits({2}), false});
  e.push_back({kPrecupanuSelf, false, {"a", "x", "y"}, bits({1, 2}), false});
  e.push_back({kAngle, false, {"a", "x", "y"}, bits({0, 1, 2}), false});
  e.push_back({kMoore, false, {"x", "y", "z"}, bits({0, 1, 2}), false, 0, bits({1, 2}), false});
  e.push_back({kPrecupanuMoore, false, {"a", "b", "x"}, bits({0, 1, 2}), false, 2, bits({0, 1}),
               true});
  e.push_back({kBuzano, true, {"a", "b", "x"}, bits({2}), false});
  e.push_back({kBuzanoMoore, true, {"x", "a", "b"}, bits({0, 1, 2}), false, 0, bits({1, 2}),
               false});
  e.push_back({kT15i, false, {"a", "x", "y"}, bits({0, 1, 2}), false, 0, bits({1, 2}), true});
  e.push_back({kT15ii, false, {"a", "b", "x"}, bits({0, 1, 2}), false, 2, bits({0, 1}), false});
  e.push_back({kGeneralized, true, {"x", "y"}, bits({0, 1}), true});
  e.push_back({kChain, true, {"x", "y"}, bits({0, 1}), true});
  e.push_back({kRealDouble, false, {"x", "y"}, bits({0, 1}), true});
  e.push_back({kKurepa, false, {"a", "z.re", "z.im"}, bits({0}), false});
  e.push_back({kKurepaRefined, false, {"w.re", "w.im"}, 0, true});
  return e;
}

template <typename Real>
void push_premise(Outcome<Real>& out, const PremiseCheck<Real>& c) {
  out.premises_hold = out.premises_hold && c.premises_hold;
  out.links.push_back(c.conclusion);
}

template <typename Real>
Real clamp_unit(Real v) {
  return std::min(std::max(v, Real(0)), Real(1));
}

// Vacuous stand-in when no admissible parameter exists.
template <typename Real>
Outcome<Real> vacuous() {
  Outcome<Real> out;
  out.premises_hold = false;
  return out;
}

template <typename Real>
Outcome<Real> evaluate_links(const Instance<Real>& inst) {
  using namespace names;
  const auto& s = inst.space;
  const auto& v = inst.vectors;
  const auto& e = inst.family_e;
  const auto& f = inst.family_f;
  const std::string_view n = inst.ineq;
  Outcome<Real> out;
  if (n == kSchwarz) {
    out.links.push_back(eval_schwarz(s, v[0], v[1]));
  } else if (n == kPrecupanu) {
    out.links.push_back(eval_precupanu_real(s, v[0], v[1], v[2], v[3]));
  } else if (n == kRichard) {
    out.links.push_back(eval_richard(s, v[0], v[1], v[2]));
  } else if (n == kPrecupanuSelf) {
    out.links.push_back(eval_precupanu_self(s, v[0], v[1], v[2]));
  } else if (n == kAngle) {
    out.links.push_back(eval_angle_bound(s, v[0], v[1], v[2]));
  } else if (n == kMoore) {
    const Real c = std::min(std::abs(cosine(s, v[0], v[1])), std::abs(cosine(s, v[0], v[2])));
    push_premise(out, verify_moore(s, v[0], v[1], v[2], Real(1) - clamp_unit(c)));
  } else if (n == kPrecupanuMoore) {
    const Real ca = cosine(s, v[2], v[0]);
    const Real cb = cosine(s, v[2], v[1]);
    MooreParams<Real> p;
    p.eps1 = std::min(ca, cb);
    if (!(*p.eps1 > Real(0))) return vacuous<Real>();
    p.eps2 = std::max(ca, cb);
    if (!(*p.eps2 > *p.eps1)) p.eps2 = *p.eps1 * (1 + std::numeric_limits<Real>::epsilon());
    const auto c = verify_precupanu_moore(s, v[0], v[1], v[2], p);
    out.premises_hold = c.premises_hold;
    out.links.push_back(c.conclusion);
    if (c.refinement) out.links.push_back(*c.refinement);
  } else if (n == kBuzano) {
    out.links.push_back(eval_buzano(s, v[0], v[1], v[2]));
  } else if (n == kBuzanoMoore) {
    const auto abs_cos = [&](const Vector<Real>& w) {
      return std::abs(inner(s, v[0], w)) / (norm(s, v[0]) * norm(s, w));
    };
    const Real c = std::min(abs_cos(v[1]), abs_cos(v[2]));
    const Real eps = std::max(Real(1) - clamp_unit(c), Real(1e-15));
    const auto r = verify_buzano_moore(s, v[0], v[1], v[2], eps);
    out.premises_hold = r.premises_hold;
    out.links.push_back(r.conclusion);
  } else if (n == kT15i) {
    const Real d1 = std::min(cosine(s, v[1], v[0]), Real(1));
    const Real d2 = std::min(cosine(s, v[2], v[0]), Real(1));
    if (!(d1 > Real(0) && d2 > Real(0) && d1 + d2 >= Real(1))) return vacuous<Real>();
    push_premise(out, eval_theorem_1_5_i(s, v[0], v[1], v[2], d1, d2));
  } else if (n == kT15ii) {
    const Real mu = std::clamp(cosine(s, v[2], v[0]) * cosine(s, v[2], v[1]), Real(-1), Real(1));
    std::optional<Real> mu1, mu2;
    if (mu >= Real(0)) mu1 = mu;
    if (mu <= Real(0)) mu2 = mu;
    const auto r = eval_theorem_1_5_ii(s, v[0], v[1], v[2], mu1, mu2);
    if (r.lower) push_premise(out, *r.lower);
    if (r.upper) push_premise(out, *r.upper);
  } else if (n == kGeneralized) {
    out.links.push_back(eval_generalized(s, e, f, v[0], v[1]));
  } else if (n == kChain) {
    auto c = eval_chain(s, e, f, v[0], v[1]);
    out.links.push_back(std::move(c.eval1));
    out.links.push_back(std::move(c.eval2));
  } else if (n == kRealDouble) {
    out.links.push_back(eval_real_family_double(s, e, f, v[0], v[1]));
  } else if (n == kKurepa) {
    auto k = eval_kurepa(s, v[0], ComplexifiedVector<Real>{v[1], v[2]});
    out.links.push_back(std::move(k.eval1));
    out.links.push_back(std::move(k.eval2));
  } else if (n == kKurepaRefined) {
    auto k = eval_kurepa_refined(s, e, f, ComplexifiedVector<Real>{v[0], v[1]});
    out.links.push_back(std::move(k.eval1));
    out.links.push_back(std::move(k.eval2));
    out.links.push_back(std::move(k.eval3));
  } else {
    throw UsageError("unknown inequality: " + inst.ineq);
  }
  return out;
}

template <typename Real>
void append(std::vector<double>& out, const Vector<Real>& v, bool complex) {
  for (int i = 0; i < v.dim(); ++i) out.push_back(static_cast<double>(v[i].real()));
  if (complex) {
    for (int i = 0; i < v.dim(); ++i) out.push_back(static_cast<double>(v[i].imag()));
  }
}

Vector<double> take(std::span<const double> theta, std::size_t& pos, int dim, bool complex) {
  Vector<double>::Coords c(dim);
  for (int i = 0; i < dim; ++i) c[i] = {theta[pos + i], 0.0};
  pos += static_cast<std::size_t>(dim);
  if (complex) {
    for (int i = 0; i < dim; ++i) c[i].imag(theta[pos + i]);
    pos += static_cast<std::size_t>(dim);
  }
  return Vector<double>(std::move(c));
}

OrthonormalFamily<double> take_family(const Space<double>& space, std::span<const double> theta,
                                      std::size_t& pos, std::size_t size) {
  if (size == 0) return OrthonormalFamily<double>(space);
  std::vector<Vector<double>> raw;
  for (std::size_t k = 0; k < size; ++k) {
    raw.push_back(take(theta, pos, space.dim(), !space.is_real()));
  }
  return gram_schmidt(space, std::span<const Vector<double>>(raw));
}

}  // namespace

const EntryInfo& entry_info(std::string_view name) {
  static const std::vector<EntryInfo> entries = build_entries();
  for (const auto& e : entries) {
    if (e.name == name) return e;
  }
  throw UsageError("unknown inequality: " + std::string(name));
}

template <typename Real>
bool Outcome<Real>::holds() const {
  if (!premises_hold) return true;
  return std::all_of(links.begin(), links.end(), [](const auto& l) { return l.holds; });
}

template <typename Real>
bool Outcome<Real>::near_equality() const {
  if (!premises_hold) return false;
  return std::any_of(links.begin(), links.end(), [](const auto& l) { return l.near_equality; });
}

template <typename Real>
Real Outcome<Real>::relative_margin() const {
  Real m = std::numeric_limits<Real>::infinity();
  for (const auto& l : links) m = std::min(m, l.relative_margin());
  return m;
}

template <typename Real>
std::size_t Outcome<Real>::worst_link() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < links.size(); ++i) {
    if (links[i].relative_margin() < links[best].relative_margin()) best = i;
  }
  return best;
}

template <typename Real>
std::string instance_digest(const Instance<Real>& inst) {
  Digest d(inst.space.field(), inst.space.dim());
  d.add(inst.family_e).add(inst.family_f);
  for (const auto& v : inst.vectors) d.add(v);
  return d.hex();
}

template <typename Real>
Outcome<Real> evaluate(const Instance<Real>& inst) {
  const EntryInfo& info = entry_info(inst.ineq);
  if (inst.vectors.size() != info.vectors.size()) {
    throw UsageError(inst.ineq + " takes " + std::to_string(info.vectors.size()) + " vectors");
  }
  Outcome<Real> out = evaluate_links(inst);
  out.digest = instance_digest(inst);
  return out;
}

template <typename Real>
std::vector<double> flatten(const Instance<Real>& inst) {
  const bool complex = !inst.space.is_real();
  std::vector<double> out;
  for (const auto& v : inst.vectors) append(out, v, complex);
  for (const auto& m : inst.family_e.members()) append(out, m, complex);
  for (const auto& m : inst.family_f.members()) append(out, m, complex);
  return out;
}

Instance<double> unflatten(const Instance<double>& shape, std::span<const double> theta) {
  const bool complex = !shape.space.is_real();
  const int dim = shape.space.dim();
  Instance<double> out(shape.ineq, shape.space);
  std::size_t pos = 0;
  for (std::size_t k = 0; k < shape.vectors.size(); ++k) {
    out.vectors.push_back(take(theta, pos, dim, complex));
  }
  out.family_e = take_family(shape.space, theta, pos, shape.family_e.size());
  out.family_f = take_family(shape.space, theta, pos, shape.family_f.size());
  if (pos != theta.size()) throw UsageError("coordinate count does not match instance shape");
  return out;
}

#define INEQFORGE_INSTANTIATE(R)                                     \
  template struct Outcome<R>;                                        \
  template Outcome<R> evaluate(const Instance<R>&);                  \
  template std::string instance_digest(const Instance<R>&);          \
  template std::vector<double> flatten(const Instance<R>&);

INEQFORGE_INSTANTIATE(double)
INEQFORGE_INSTANTIATE(long double)
#undef INEQFORGE_INSTANTIATE

}  // namespace ineqforge
