#include "lmgdfm/model.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <set>

namespace lmgdfm {

using nlohmann::json;

std::string regime_name(MemoryRegime r) {
  switch (r) {
    case MemoryRegime::FactorHomogeneous:
      return "factor-homogeneous";
    case MemoryRegime::FactorHeterogeneous:
      return "factor-heterogeneous";
    case MemoryRegime::RowHeterogeneous:
      return "row-heterogeneous";
    case MemoryRegime::EntryWise:
      return "entry-wise";
  }
  return "?";
}

bool ar_polynomial_stable(const std::vector<double>& phi) {
  if (phi.empty()) return true;
  if (phi.size() == 1) return std::abs(phi[0]) < 1.0;
  // Companion matrix of z^r - phi_1 z^{r-1} - ... - phi_r; stability is
  // spectral radius < 1.
  const int r = static_cast<int>(phi.size());
  Matrix C = Matrix::Zero(r, r);
  for (int k = 0; k < r; ++k) C(0, k) = phi[k];
  for (int k = 1; k < r; ++k) C(k, k - 1) = 1.0;
  Eigen::EigenSolver<Matrix> es(C, /*computeEigenvectors=*/false);
  return es.eigenvalues().array().abs().maxCoeff() < 1.0 - 1e-12;
}

void ModelSpec::validate() const {
  if (n < 1) throw config_error("ModelSpec: n must be positive");
  if (q < 1 || q > n) throw config_error("ModelSpec: need 1 <= q <= n");
  if (static_cast<int>(entries.size()) != n) throw config_error("ModelSpec: entries must have n rows");
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != q) throw config_error("ModelSpec: entries must have q columns");
    for (const auto& e : row) {
      if (!(e.d >= 0.0 && e.d < 0.5)) throw std::domain_error("ModelSpec: memory d must lie in [0, 0.5)");
      if (e.theta.empty()) throw std::domain_error("ModelSpec: Theta(L) must have at least theta_0");
      if (!ar_polynomial_stable(e.phi))
        throw std::domain_error("ModelSpec: Phi(L) has a root on or inside the unit circle");
    }
  }
  if (idio.kind == IdioKind::OrthonormalWhiteNoise) {
    if (idio.sigma2 < 0.0) throw std::domain_error("ModelSpec: white-noise variance must be >= 0");
  } else {
    if (std::abs(idio.phi_eps) >= 1.0) throw std::domain_error("ModelSpec: |phi_eps| must be < 1");
    if (std::abs(idio.r_cs) >= 1.0) throw std::domain_error("ModelSpec: |r_cs| must be < 1");
    if (idio.sigma_eps < 0.0) throw std::domain_error("ModelSpec: sigma_eps must be >= 0");
  }
}

MemoryRegime ModelSpec::regime() const {
  bool same_within_column = true;  // d_il = d_l
  bool same_within_row = true;     // d_il = d_i
  for (int l = 0; l < q; ++l)
    for (int i = 1; i < n; ++i)
      if (entries[i][l].d != entries[0][l].d) same_within_column = false;
  for (int i = 0; i < n; ++i)
    for (int l = 1; l < q; ++l)
      if (entries[i][l].d != entries[i][0].d) same_within_row = false;
  if (same_within_column && same_within_row) return MemoryRegime::FactorHomogeneous;
  if (same_within_column) return MemoryRegime::FactorHeterogeneous;
  if (same_within_row) return MemoryRegime::RowHeterogeneous;
  return MemoryRegime::EntryWise;
}

bool ModelSpec::all_loadings_zero() const {
  for (const auto& row : entries)
    for (const auto& e : row)
      if (e.c != 0.0) return false;
  return true;
}

namespace {

json entry_to_json(const TransferEntry& e) {
  json j;
  j["d"] = e.d;
  j["c"] = e.c;
  if (e.theta == std::vector<double>{1.0} && e.phi.size() <= 1) {
    j["alpha"] = e.phi.empty() ? 0.0 : e.phi[0];
  } else {
    j["theta"] = e.theta;
    j["phi"] = e.phi;
  }
  return j;
}

TransferEntry entry_from_json(const json& j) {
  TransferEntry e;
  e.d = j.value("d", 0.0);
  e.c = j.value("c", 1.0);
  if (j.contains("theta") || j.contains("phi")) {
    e.theta = j.value("theta", std::vector<double>{1.0});
    e.phi = j.value("phi", std::vector<double>{});
  } else {
    const double alpha = j.value("alpha", 0.0);
    e = TransferEntry::one_pole(e.d, e.c, alpha);
  }
  return e;
}

/// A scalar column profile: number, n-array, or {"linspace": [lo, hi]}.
std::vector<double> materialize_profile(const json& j, int n, const char* what) {
  std::vector<double> out(n);
  if (j.is_number()) {
    std::fill(out.begin(), out.end(), j.get<double>());
  } else if (j.is_array()) {
    if (static_cast<int>(j.size()) != n)
      throw config_error(std::string("model: array for '") + what + "' must have n entries");
    for (int i = 0; i < n; ++i) out[i] = j[i].get<double>();
  } else if (j.is_object() && j.contains("linspace")) {
    const double lo = j["linspace"][0].get<double>();
    const double hi = j["linspace"][1].get<double>();
    for (int i = 0; i < n; ++i) out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  } else {
    throw config_error(std::string("model: cannot parse profile for '") + what + "'");
  }
  return out;
}

IdioSpec idio_from_json(const json& j) {
  const std::string kind = j.value("kind", "white");
  if (kind == "white") return IdioSpec::white(j.value("sigma2", 1.0));
  if (kind == "dense_ar1")
    return IdioSpec::dense_ar1(j.value("sigma_eps", 1.0), j.value("phi_eps", 0.0), j.value("r_cs", 0.0));
  throw config_error("model: unknown idio kind '" + kind + "'");
}

json idio_to_json(const IdioSpec& s) {
  json j;
  if (s.kind == IdioKind::OrthonormalWhiteNoise) {
    j["kind"] = "white";
    j["sigma2"] = s.sigma2;
  } else {
    j["kind"] = "dense_ar1";
    j["sigma_eps"] = s.sigma_eps;
    j["phi_eps"] = s.phi_eps;
    j["r_cs"] = s.r_cs;
  }
  return j;
}

}  // namespace

json ModelSpec::to_json() const {
  json j;
  j["n"] = n;
  j["q"] = q;
  json rows = json::array();
  for (const auto& row : entries) {
    json r = json::array();
    for (const auto& e : row) r.push_back(entry_to_json(e));
    rows.push_back(r);
  }
  j["entries"] = rows;
  j["idio"] = idio_to_json(idio);
  return j;
}

ModelSpec ModelSpec::from_json(const json& j, int n_override) {
  ModelSpec spec;
  spec.n = n_override > 0 ? n_override : j.value("n", 0);
  spec.q = j.value("q", 1);
  if (j.contains("idio")) spec.idio = idio_from_json(j["idio"]);

  if (j.contains("entries")) {
    if (n_override > 0 && j.contains("n") && j["n"].get<int>() != n_override)
      throw config_error("model: explicit entries cannot be resized to a different n");
    const json& rows = j["entries"];
    spec.n = static_cast<int>(rows.size());
    for (const auto& r : rows) {
      std::vector<TransferEntry> row;
      for (const auto& ej : r) row.push_back(entry_from_json(ej));
      spec.entries.push_back(std::move(row));
    }
  } else if (j.contains("columns")) {
    const json& cols = j["columns"];
    spec.q = static_cast<int>(cols.size());
    if (spec.n < 1) throw config_error("model: compact form requires n");
    std::vector<std::vector<double>> d(spec.q), alpha(spec.q), c(spec.q);
    for (int l = 0; l < spec.q; ++l) {
      d[l] = materialize_profile(cols[l].value("d", json(0.0)), spec.n, "d");
      alpha[l] = materialize_profile(cols[l].value("alpha", json(0.0)), spec.n, "alpha");
      c[l] = materialize_profile(cols[l].value("c", json(1.0)), spec.n, "c");
    }
    spec.entries.resize(spec.n);
    for (int i = 0; i < spec.n; ++i) {
      spec.entries[i].reserve(spec.q);
      for (int l = 0; l < spec.q; ++l)
        spec.entries[i].push_back(TransferEntry::one_pole(d[l][i], c[l][i], alpha[l][i]));
    }
    if (j.contains("overrides")) {
      for (const auto& ov : j["overrides"]) {
        const int i = ov.at("i").get<int>() - 1;  // 1-based in configs
        const int l = ov.at("l").get<int>() - 1;
        if (i < 0 || i >= spec.n || l < 0 || l >= spec.q)
          throw config_error("model: override index out of range");
        TransferEntry& e = spec.entries[i][l];
        if (ov.contains("d")) e.d = ov["d"].get<double>();
        if (ov.contains("c")) e.c = ov["c"].get<double>();
        if (ov.contains("alpha")) e = TransferEntry::one_pole(e.d, e.c, ov["alpha"].get<double>());
      }
    }
  } else {
    throw config_error("model: need either 'entries' or 'columns'");
  }
  spec.validate();
  return spec;
}

}  // namespace lmgdfm
