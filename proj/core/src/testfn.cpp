#include "parab/testfn.hpp"

#include <cmath>
#include <stdexcept>

namespace parab {

namespace {

std::vector<int> parse_basis_id(const std::string& id, const std::string& domain, size_t nfields) {
  // "basis:<domain>:<i>:<j>[:<k>]"
  const std::string prefix = "basis:" + domain + ":";
  if (id.rfind(prefix, 0) != 0) return {};
  std::vector<int> fields;
  size_t pos = prefix.size();
  while (pos <= id.size()) {
    const size_t next = id.find(':', pos);
    const std::string tok = id.substr(pos, next == std::string::npos ? next : next - pos);
    fields.push_back(std::stoi(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  if (fields.size() != nfields)
    throw std::invalid_argument("test function id '" + id + "': wrong number of indices");
  return fields;
}

double bump(double r2) { return std::exp(-8.0 * r2); }

}  // namespace

std::vector<TestFunctionInfo> list_test_functions() {
  return {
      {"const", "U,V0,V", "f = 1"},
      {"x1", "U,V0,V", "first coordinate x1"},
      {"x2", "U", "second coordinate x2"},
      {"t", "V0,V", "height coordinate t"},
      {"abs-x1", "U,V0,V", "|x1|, continuous with a kink"},
      {"dist-boundary", "U,V0,V", "distance-like gauge to the domain boundary"},
      {"bump", "U,V0,V", "smooth bump centered inside the domain"},
      {"one-plus-x1-sq", "U,V0,V", "(1 + x1)^2, a nonnegative polynomial"},
      {"basis:U:<n>:<k>", "U", "basis element P_{k,n}"},
      {"basis:V0:<n>:<m>:<ell>", "V0", "basis element Q_{m,ell}^n"},
      {"basis:V:<n>:<m>:<kappa>", "V", "basis element bQ_{m,kappa}^n (kappa 0-based)"},
  };
}

std::function<double(const UPoint&)> test_function_u(const std::string& id, const WeightU& w) {
  if (id == "const") return [](const UPoint&) { return 1.0; };
  if (id == "x1") return [](const UPoint& p) { return p.x1; };
  if (id == "x2") return [](const UPoint& p) { return p.x2; };
  if (id == "abs-x1") return [](const UPoint& p) { return std::abs(p.x1); };
  if (id == "dist-boundary")
    return [](const UPoint& p) { return std::min(1.0 - p.x2, p.x2 - p.x1 * p.x1); };
  if (id == "bump")
    return [](const UPoint& p) {
      return bump(p.x1 * p.x1 + (p.x2 - 0.5) * (p.x2 - 0.5));
    };
  if (id == "one-plus-x1-sq")
    return [](const UPoint& p) { return (1.0 + p.x1) * (1.0 + p.x1); };
  if (auto f = parse_basis_id(id, "U", 2); !f.empty()) {
    const int n = f[0], k = f[1];
    return [n, k, w](const UPoint& p) { return basis_eval(k, n, w, p); };
  }
  throw std::invalid_argument("unknown test function for U: " + id);
}

std::function<double(const SurfacePoint&)> test_function_v0(const std::string& id,
                                                            const WeightV0& w) {
  if (id == "const") return [](const SurfacePoint&) { return 1.0; };
  if (id == "x1")
    return [](const SurfacePoint& p) { return std::sqrt(p.t) * p.xi[0]; };
  if (id == "t") return [](const SurfacePoint& p) { return p.t; };
  if (id == "abs-x1")
    return [](const SurfacePoint& p) { return std::abs(std::sqrt(p.t) * p.xi[0]); };
  if (id == "dist-boundary")
    return [](const SurfacePoint& p) { return std::min(p.t, 1.0 - p.t); };
  if (id == "bump")
    return [](const SurfacePoint& p) {
      const double x1 = std::sqrt(p.t) * p.xi[0];
      return bump(x1 * x1 + (p.t - 0.5) * (p.t - 0.5));
    };
  if (id == "one-plus-x1-sq")
    return [](const SurfacePoint& p) {
      const double x1 = std::sqrt(p.t) * p.xi[0];
      return (1.0 + x1) * (1.0 + x1);
    };
  if (auto f = parse_basis_id(id, "V0", 3); !f.empty()) {
    const int n = f[0], m = f[1], ell = f[2];
    return [n, m, ell, w](const SurfacePoint& p) { return basis_Q_eval(n, m, ell, w, p); };
  }
  throw std::invalid_argument("unknown test function for V0: " + id);
}

std::function<double(const SolidPoint&)> test_function_v(const std::string& id, const WeightV& w,
                                                         std::shared_ptr<const BallBasis> basis) {
  if (id == "const") return [](const SolidPoint&) { return 1.0; };
  if (id == "x1") return [](const SolidPoint& p) { return p.x[0]; };
  if (id == "t") return [](const SolidPoint& p) { return p.t; };
  if (id == "abs-x1") return [](const SolidPoint& p) { return std::abs(p.x[0]); };
  if (id == "dist-boundary")
    return [](const SolidPoint& p) { return std::min(1.0 - p.t, p.t - norm2(p.x)); };
  if (id == "bump")
    return [](const SolidPoint& p) {
      return bump(norm2(p.x) + (p.t - 0.5) * (p.t - 0.5));
    };
  if (id == "one-plus-x1-sq")
    return [](const SolidPoint& p) { return (1.0 + p.x[0]) * (1.0 + p.x[0]); };
  if (auto f = parse_basis_id(id, "V", 3); !f.empty()) {
    const int n = f[0], m = f[1], kappa = f[2];
    if (!basis) throw std::invalid_argument("basis test function needs a BallBasis");
    return [n, m, kappa, w, basis](const SolidPoint& p) {
      return basis_bQ_eval(n, m, kappa, w, *basis, p);
    };
  }
  throw std::invalid_argument("unknown test function for V: " + id);
}

}  // namespace parab
