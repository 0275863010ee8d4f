#include "dunkl/reflection.hpp"

#include <algorithm>
#include <set>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

bool root_is_zero(const Root& root) {
  for (const auto& c : root.coords)
    if (!is_zero(c)) return false;
  return true;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Root apply(const Mat& m, const Root& root) {
  const int n = root.ambient_size();
  Root out;
  out.coords.assign(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out.coords[static_cast<std::size_t>(i)] +=
          m.at(i, j) * root.coords[static_cast<std::size_t>(j)];
  return out;
}

// Stable total order on matrices for the closure set.
std::vector<Rational> matrix_key(const Mat& m) {
  std::vector<Rational> key;
  key.reserve(static_cast<std::size_t>(m.rows() * m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) key.push_back(m.at(r, c));
  return key;
}

Root axis_root(int d, int i, int sign_j = 0, int j = -1) {
  Root root;
  root.coords.assign(static_cast<std::size_t>(d + 1), Rational(0));
  root.coords[static_cast<std::size_t>(i)] = Rational(1);
  if (j >= 1) root.coords[static_cast<std::size_t>(j)] = Rational(sign_j);
  return root;
}

}  // namespace

std::vector<Rational> canonical_root_key(const Root& root) {
  if (root_is_zero(root)) throw ZeroRoot("zero vector is not a root");
  Integer lcm_den(1);
  for (const auto& c : root.coords)
    if (!is_zero(c)) lcm_den = lcm(lcm_den, c.get_den());
  std::vector<Rational> key;
  key.reserve(root.coords.size());
  Integer content(0);
  for (const auto& c : root.coords) {
    Rational scaled = c * Rational(lcm_den);
    scaled.canonicalize();
    content = gcd(content, scaled.get_num());
    key.push_back(scaled);
  }
  int lead = 0;
  for (const auto& c : key) {
    if (!is_zero(c)) {
      lead = sgn(c);
      break;
    }
  }
  for (auto& c : key) {
    c /= Rational(content);
    if (lead < 0) c = -c;
  }
  return key;
}

Mat reflection_matrix(const Root& alpha) {
  if (root_is_zero(alpha)) throw ZeroRoot("cannot reflect along the zero vector");
  const int n = alpha.ambient_size();
  const Rational norm_sq = dot(alpha.coords, alpha.coords);
  Mat m = Mat::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m.at(i, j) -= Rational(2) * alpha.coords[static_cast<std::size_t>(i)] *
                    alpha.coords[static_cast<std::size_t>(j)] / norm_sq;
  return m;
}

void MultiplicityFunction::set(const Root& root, Rational value) {
  values_[canonical_root_key(root)] = std::move(value);
}

Rational MultiplicityFunction::at(const Root& root) const {
  auto it = values_.find(canonical_root_key(root));
  if (it == values_.end()) throw UnknownGroup("multiplicity undefined on root");
  return it->second;
}

bool MultiplicityFunction::defined_on(const Root& root) const {
  return values_.find(canonical_root_key(root)) != values_.end();
}

ReflectionGroup::ReflectionGroup(std::string name, int d, std::vector<Root> positive_roots,
                                 MultiplicityFunction kappa)
    : name_(std::move(name)), d_(d), positive_roots_(std::move(positive_roots)),
      kappa_(std::move(kappa)) {
  if (d_ < 1) throw DimensionMismatch("group dimension must be >= 1");
  for (const auto& root : positive_roots_) {
    if (root.ambient_size() != d_ + 1) throw DimensionMismatch("root length must be d+1");
    if (!is_zero(root.coords[0])) throw ZeroRoot("roots must have zero x_0 coordinate");
    if (root_is_zero(root)) throw ZeroRoot("zero vector is not a root");
  }
  // Breadth-first closure of the generating reflections.
  std::set<std::vector<Rational>> seen;
  std::vector<Mat> frontier;
  const Mat id = Mat::identity(d_ + 1);
  seen.insert(matrix_key(id));
  elements_.push_back(id);
  frontier.push_back(id);
  std::vector<Mat> generators;
  generators.reserve(positive_roots_.size());
  for (const auto& root : positive_roots_) generators.push_back(reflection_matrix(root));
  // Arbitrary rational roots can generate an infinite group; cap the
  // closure so a bad hand-built system fails loudly instead of spinning.
  constexpr std::size_t kClosureCap = 200000;
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& w : frontier) {
      for (const auto& g : generators) {
        Mat prod = g * w;
        auto key = matrix_key(prod);
        if (seen.insert(std::move(key)).second) {
          elements_.push_back(prod);
          next.push_back(std::move(prod));
          if (elements_.size() > kClosureCap)
            throw Error("reflection closure exceeds bound; group is not finite");
        }
      }
    }
    frontier = std::move(next);
  }
}

Rational ReflectionGroup::gamma_kappa() const {
  Rational sum(0);
  for (const auto& root : positive_roots_) sum += kappa_.at(root);
  return sum;
}

Rational ReflectionGroup::dunkl_dimension() const {
  return Rational(2) * gamma_kappa() + Rational(d_);
}

ReflectionGroup builtin_group(std::string_view name, int d,
                              const std::vector<Rational>& kappa_params) {
  if (d < 1) throw DimensionMismatch("group dimension must be >= 1");
  for (const auto& k : kappa_params)
    if (sgn(k) < 0) throw NegativeKappa("multiplicity values must be >= 0");

  std::vector<Root> roots;
  MultiplicityFunction kappa;
  std::string canonical_name;

  if (name == "a1") {
    // Sign flips; one orbit per axis.
    if (static_cast<int>(kappa_params.size()) != d)
      throw BadKappaArity("a1 expects d multiplicity values");
    for (int i = 1; i <= d; ++i) {
      Root root = axis_root(d, i);
      kappa.set(root, kappa_params[static_cast<std::size_t>(i - 1)]);
      roots.push_back(std::move(root));
    }
    canonical_name = "a1:d=" + std::to_string(d);
  } else if (name == "sd") {
    // e_i - e_j, one conjugacy class.
    if (kappa_params.size() != 1) throw BadKappaArity("sd expects one multiplicity value");
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) {
        Root root = axis_root(d, i, -1, j);
        kappa.set(root, kappa_params[0]);
        roots.push_back(std::move(root));
      }
    canonical_name = "sd:d=" + std::to_string(d);
  } else if (name == "bd" || name == "b2planar") {
    if (name == "b2planar" && d != 2)
      throw UnknownGroup("b2planar fixes d = 2");
    if (kappa_params.size() != 2)
      throw BadKappaArity("bd expects two multiplicity values (short, long)");
    for (int i = 1; i <= d; ++i) {
      Root root = axis_root(d, i);
      kappa.set(root, kappa_params[0]);
      roots.push_back(std::move(root));
    }
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j) {
        for (int sign : {-1, +1}) {
          Root root = axis_root(d, i, sign, j);
          kappa.set(root, kappa_params[1]);
          roots.push_back(std::move(root));
        }
      }
    canonical_name = "bd:d=" + std::to_string(d);
  } else {
    throw UnknownGroup("unknown group family: " + std::string(name));
  }

  return ReflectionGroup(canonical_name, d, std::move(roots), std::move(kappa));
}

VerificationReport validate(const ReflectionGroup& group) {
  VerificationReport report;
  report.case_id = "validate-group/" + group.name();
  const int n = group.d() + 1;

  // Full root set R = R_+ union -R_+.
  std::vector<Root> all_roots;
  std::set<std::vector<Rational>> root_keys;
  for (const auto& root : group.positive_roots()) {
    all_roots.push_back(root);
    Root neg;
    for (const auto& c : root.coords) neg.coords.push_back(-c);
    all_roots.push_back(std::move(neg));
    root_keys.insert(canonical_root_key(root));
  }

  // R cap span{alpha} = {alpha, -alpha}: distinct positive roots must not be
  // proportional.
  bool proportional_ok = root_keys.size() == group.positive_roots().size();
  report.add("roots.no_proportional_pair", proportional_ok);

  // sigma_alpha R = R for every root.
  bool stable = true;
  auto contains = [&](const Root& r) {
    for (const auto& other : all_roots)
      if (other.coords == r.coords) return true;
    return false;
  };
  for (const auto& alpha : all_roots) {
    const Mat sigma = reflection_matrix(alpha);
    for (const auto& root : all_roots)
      if (!contains(apply(sigma, root))) stable = false;
  }
  report.add("roots.reflection_stable", stable);

  // kappa(alpha) = kappa(w alpha) over the whole group orbit; covers
  // kappa(alpha) = kappa(-alpha) since -alpha = sigma_alpha alpha.
  bool invariant = true;
  for (const auto& w : group.elements()) {
    for (const auto& root : group.positive_roots()) {
      const Root image = apply(w, root);
      if (!group.kappa().defined_on(image) ||
          group.kappa().at(image) != group.kappa().at(root))
        invariant = false;
    }
  }
  report.add("kappa.w_invariant", invariant);

  // Every element is orthogonal and fixes the x_0 axis.
  bool orthogonal = true, fixes_x0 = true;
  const Mat id = Mat::identity(n);
  for (const auto& w : group.elements()) {
    if (!(w.transpose() * w == id)) orthogonal = false;
    for (int r = 0; r < n; ++r) {
      const Rational expected = r == 0 ? Rational(1) : Rational(0);
      if (w.at(r, 0) != expected || w.at(0, r) != expected) fixes_x0 = false;
    }
  }
  report.add("elements.orthogonal", orthogonal);
  report.add("elements.fix_x0", fixes_x0);

  // Closure under multiplication.
  std::set<std::vector<Rational>> element_keys;
  for (const auto& w : group.elements()) element_keys.insert(matrix_key(w));
  bool closed = true;
  for (const auto& a : group.elements())
    for (const auto& b : group.elements())
      if (element_keys.find(matrix_key(a * b)) == element_keys.end()) closed = false;
  report.add("elements.closed", closed);

  if (group.classical()) report.add("note.classical_mode", true);
  return report;
}

ReflectionGroup parse_group_spec(std::string_view spec) {
  // family:d=<int>:kappa=<r1>,<r2>,...
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const std::size_t colon = spec.find(':', start);
    if (colon == std::string_view::npos) {
      parts.emplace_back(spec.substr(start));
      break;
    }
    parts.emplace_back(spec.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.size() != 3) throw UsageError("group spec must be family:d=<n>:kappa=<list>");
  const std::string& family = parts[0];
  if (parts[1].rfind("d=", 0) != 0) throw UsageError("group spec missing d=<n>");
  int d = 0;
  try {
    d = std::stoi(parts[1].substr(2));
  } catch (const std::exception&) {
    throw UsageError("bad dimension in group spec");
  }
  if (parts[2].rfind("kappa=", 0) != 0) throw UsageError("group spec missing kappa=<list>");
  std::vector<Rational> kappa_params;
  std::string list = parts[2].substr(6);
  std::size_t pos = 0;
  while (pos <= list.size() && !list.empty()) {
    const std::size_t comma = list.find(',', pos);
    const std::string item =
        comma == std::string::npos ? list.substr(pos) : list.substr(pos, comma - pos);
    kappa_params.push_back(parse_rational(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return builtin_group(family, d, kappa_params);
}

}  // namespace dunkl
