#include "liederiv/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace liederiv {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
  throw std::invalid_argument(origin + ": " + what);
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(origin, e.what());
  }
}

int get_int(const json& j, const char* key, const std::string& origin) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    fail(origin, std::string("missing or non-integer '") + key + "'");
  }
  return j[key].get<int>();
}

Rat coeff_from_json(const json& c, const std::string& origin) {
  if (c.is_number_integer()) return Rat(c.get<long>());
  if (c.is_string()) {
    try {
      return rat_from_string(c.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(origin, e.what());
    }
  }
  fail(origin, "coefficient must be an integer or a rational string");
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << text;
}

AlgebraInput parse_algebra(const std::string& text,
                           const std::string& origin) {
  json j = parse_json(text, origin);
  if (!j.is_object()) fail(origin, "top level must be an object");
  if (get_int(j, "format_version", origin) != 1) {
    fail(origin, "unsupported format_version (expected 1)");
  }
  int dim = get_int(j, "dim", origin);
  if (dim < 0) fail(origin, "dim must be >= 0");

  AlgebraInput input;
  if (j.contains("field")) {
    if (!j["field"].is_string()) fail(origin, "'field' must be a string");
    input.field = j["field"].get<std::string>();
  }
  std::uint32_t p = 0;
  if (input.field != "Q") {
    if (input.field.rfind("GF(", 0) != 0 || input.field.back() != ')') {
      fail(origin, "field must be \"Q\" or \"GF(p)\"");
    }
    try {
      p = std::uint32_t(
          std::stoul(input.field.substr(3, input.field.size() - 4)));
    } catch (const std::exception&) {
      fail(origin, "cannot parse the prime in '" + input.field + "'");
    }
  }

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || int(j["labels"].size()) != dim) {
      fail(origin, "'labels' must list one name per basis vector");
    }
    for (const auto& name : j["labels"]) {
      if (!name.is_string()) fail(origin, "labels must be strings");
      labels.push_back(name.get<std::string>());
    }
  }

  if (!j.contains("brackets") || !j["brackets"].is_array()) {
    fail(origin, "missing 'brackets' array");
  }

  struct RawTerm {
    int i, j, k;
    Rat c;
  };
  std::vector<RawTerm> raw;
  std::set<std::pair<int, int>> seen;
  for (const auto& entry : j["brackets"]) {
    if (!entry.is_object()) fail(origin, "bracket entries must be objects");
    int bi = get_int(entry, "i", origin);
    int bj = get_int(entry, "j", origin);
    if (bi < 1 || bj < 1 || bi > dim || bj > dim || bi >= bj) {
      fail(origin, "bracket indices must satisfy 1 <= i < j <= dim");
    }
    if (!seen.insert({bi, bj}).second) {
      fail(origin, "duplicate bracket for (i, j) = (" + std::to_string(bi) +
                       ", " + std::to_string(bj) + ")");
    }
    if (!entry.contains("terms") || !entry["terms"].is_array()) {
      fail(origin, "bracket entry is missing its 'terms' array");
    }
    std::set<int> seen_k;
    for (const auto& term : entry["terms"]) {
      if (!term.is_object()) fail(origin, "terms must be objects");
      int k = get_int(term, "k", origin);
      if (k < 1 || k > dim) fail(origin, "term index k out of range");
      if (!seen_k.insert(k).second) {
        fail(origin, "duplicate term index in one bracket");
      }
      if (!term.contains("coeff")) fail(origin, "term is missing 'coeff'");
      raw.push_back({bi, bj, k, coeff_from_json(term["coeff"], origin)});
    }
  }

  if (input.field == "Q") {
    LieAlgebra::Builder b(dim);
    for (const RawTerm& t : raw) {
      if (!is_zero(t.c)) b.add(t.i - 1, t.j - 1, t.k - 1, t.c);
    }
    if (!labels.empty()) b.labels(std::move(labels));
    try {
      input.rational = b.build();
    } catch (const std::invalid_argument& e) {
      fail(origin, e.what());
    }
  } else {
    FpContext fp(p);
    FpLieAlgebra A;
    A.p = p;
    A.dim = dim;
    for (const RawTerm& t : raw) {
      std::uint32_t v = fp_from_rat(t.c, fp);
      if (v != 0) A.table[{t.i - 1, t.j - 1}].push_back({t.k - 1, v});
    }
    if (auto bad = fp_validate_jacobi(A)) {
      auto [vi, vj, vk] = *bad;
      fail(origin, "Jacobi identity fails mod " + std::to_string(p) +
                       " at triple (" + std::to_string(vi + 1) + ", " +
                       std::to_string(vj + 1) + ", " + std::to_string(vk + 1) +
                       ")");
    }
    input.modular = std::move(A);
  }
  return input;
}

AlgebraInput load_algebra(const std::string& path) {
  return parse_algebra(read_text_file(path), path);
}

std::string algebra_to_json(const LieAlgebra& L) {
  json j;
  j["format_version"] = 1;
  j["dim"] = L.dim();
  j["field"] = "Q";
  json brackets = json::array();
  for (const auto& [pair, terms] : L.table()) {
    json entry;
    entry["i"] = pair.first + 1;
    entry["j"] = pair.second + 1;
    json jterms = json::array();
    for (const auto& [k, c] : terms) {
      json term;
      term["k"] = k + 1;
      term["coeff"] = rat_to_string(c);
      jterms.push_back(std::move(term));
    }
    entry["terms"] = std::move(jterms);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  if (!L.labels().empty()) j["labels"] = L.labels();
  return j.dump(2) + "\n";
}

void save_algebra(const LieAlgebra& L, const std::string& path) {
  write_text_file(path, algebra_to_json(L));
}

Matrix parse_matrix(const std::string& text, const std::string& origin) {
  json j = parse_json(text, origin);
  if (!j.is_object()) fail(origin, "top level must be an object");
  int rows = get_int(j, "rows", origin);
  int cols = get_int(j, "cols", origin);
  if (rows < 0 || cols < 0) fail(origin, "negative matrix shape");
  if (!j.contains("entries") || !j["entries"].is_array() ||
      int(j["entries"].size()) != rows) {
    fail(origin, "'entries' must hold one array per row");
  }
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j["entries"][std::size_t(r)];
    if (!row.is_array() || int(row.size()) != cols) {
      fail(origin, "row " + std::to_string(r + 1) + " has the wrong length");
    }
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = coeff_from_json(row[std::size_t(c)], origin);
    }
  }
  return m;
}

Matrix load_matrix(const std::string& path) {
  return parse_matrix(read_text_file(path), path);
}

std::string matrix_to_json(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

void save_matrix(const Matrix& m, const std::string& path) {
  write_text_file(path, matrix_to_json(m));
}

std::string matrix_pretty(const Matrix& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& v = m.at(r, c);
      if (is_zero(v)) continue;
      std::string unit =
          "E_{" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "}";
      Rat a = v;
      if (out.empty()) {
        if (a < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      if (a != 1) out += rat_to_string(a) + " ";
      out += unit;
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

std::vector<std::vector<std::string>> basis_to_strings(const Subspace& s) {
  std::vector<std::vector<std::string>> out;
  for (const Vec& row : s.basis()) {
    std::vector<std::string> item;
    for (const Rat& v : row) item.push_back(rat_to_string(v));
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<ReportCertificatePiece> certificate_to_strings(
    const PiecewiseCertificate& cert) {
  std::vector<ReportCertificatePiece> out;
  for (const CertificatePiece& piece : cert.pieces) {
    ReportCertificatePiece rp;
    for (const Poly& z : piece.zero_conditions) rp.zero.push_back(z.to_string());
    for (const Poly& nz : piece.nonzero_conditions) {
      rp.nonzero.push_back(nz.to_string());
    }
    for (const Poly& num : piece.phi_numerators) {
      rp.numerators.push_back(num.to_string());
    }
    rp.denominator = piece.phi_denominator.to_string();
    out.push_back(std::move(rp));
  }
  return out;
}

}  // namespace

ReportFile make_report_file(const std::string& name, const LieAlgebra& L,
                            const DerivationReport& report,
                            std::uint64_t seed) {
  ReportFile f;
  f.name = name;
  f.dim = L.dim();
  f.nilpotency_class = L.nilpotency_class();
  f.derived_length = L.derived_length();
  f.dim_inn = report.inn.dim();
  f.dim_caid = report.caid.dim();
  f.dim_aid = report.aid.dim();
  f.dim_der = report.der.dim();
  f.aid_status = report.status == AidStatus::Exact ? "exact" : "bracketed";
  if (report.status == AidStatus::Bracketed) {
    f.dim_aid_lower = report.aid_lower.dim();
    f.dim_caid_lower = report.caid_lower.dim();
  }
  f.basis_der = basis_to_strings(report.der);
  f.basis_inn = basis_to_strings(report.inn);
  f.basis_aid = basis_to_strings(report.aid);
  f.basis_caid = basis_to_strings(report.caid);
  for (const NonInnerGenerator& g : report.non_inner) {
    ReportGenerator rg;
    for (int r = 0; r < g.matrix.rows(); ++r) {
      std::vector<std::string> row;
      for (int c = 0; c < g.matrix.cols(); ++c) {
        row.push_back(rat_to_string(g.matrix.at(r, c)));
      }
      rg.matrix.push_back(std::move(row));
    }
    rg.pretty = matrix_pretty(g.matrix);
    switch (g.status) {
      case GeneratorStatus::CertifiedByFormula:
        rg.status = "certified-formula";
        break;
      case GeneratorStatus::CertifiedByDecision:
        rg.status = "certified-decision";
        break;
      case GeneratorStatus::Unverified:
        rg.status = "unverified";
        break;
    }
    rg.nilpotent = g.nilpotent;
    if (g.certificate) rg.certificate = certificate_to_strings(*g.certificate);
    f.generators.push_back(std::move(rg));
  }
  f.aid_ideal_in_der = report.aid_ideal_in_der;
  f.samples_used = report.samples_used;
  f.seed = seed;
  return f;
}

namespace {

json optional_int_json(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<int> optional_int_from(const json& j, const char* key,
                                     const std::string& origin) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  if (!j[key].is_number_integer()) {
    fail(origin, std::string("'") + key + "' must be an integer or null");
  }
  return j[key].get<int>();
}

}  // namespace

std::string report_to_json(const ReportFile& f) {
  json j;
  j["format_version"] = f.format_version;
  j["name"] = f.name;
  j["dim"] = f.dim;
  j["nilpotency_class"] = optional_int_json(f.nilpotency_class);
  j["derived_length"] = optional_int_json(f.derived_length);
  json dims;
  dims["inn"] = f.dim_inn;
  dims["caid"] = f.dim_caid;
  dims["aid"] = f.dim_aid;
  dims["der"] = f.dim_der;
  j["dims"] = std::move(dims);
  j["aid_status"] = f.aid_status;
  j["dim_aid_lower"] = optional_int_json(f.dim_aid_lower);
  j["dim_caid_lower"] = optional_int_json(f.dim_caid_lower);
  j["basis_der"] = f.basis_der;
  j["basis_inn"] = f.basis_inn;
  j["basis_aid"] = f.basis_aid;
  j["basis_caid"] = f.basis_caid;
  json gens = json::array();
  for (const ReportGenerator& g : f.generators) {
    json jg;
    jg["matrix"] = g.matrix;
    jg["pretty"] = g.pretty;
    jg["status"] = g.status;
    jg["nilpotent"] = g.nilpotent;
    if (g.certificate) {
      json pieces = json::array();
      for (const ReportCertificatePiece& piece : *g.certificate) {
        json jp;
        jp["zero"] = piece.zero;
        jp["nonzero"] = piece.nonzero;
        jp["numerators"] = piece.numerators;
        jp["denominator"] = piece.denominator;
        pieces.push_back(std::move(jp));
      }
      jg["certificate"] = std::move(pieces);
    } else {
      jg["certificate"] = nullptr;
    }
    gens.push_back(std::move(jg));
  }
  j["generators"] = std::move(gens);
  j["aid_ideal_in_der"] =
      f.aid_ideal_in_der ? json(*f.aid_ideal_in_der) : json(nullptr);
  j["samples_used"] = f.samples_used;
  j["seed"] = f.seed;
  return j.dump(2) + "\n";
}

ReportFile report_from_json(const std::string& text,
                            const std::string& origin) {
  json j = parse_json(text, origin);
  if (!j.is_object()) fail(origin, "top level must be an object");
  ReportFile f;
  f.format_version = get_int(j, "format_version", origin);
  if (f.format_version != 1) {
    fail(origin, "unsupported format_version (expected 1)");
  }
  if (!j.contains("name") || !j["name"].is_string()) {
    fail(origin, "missing 'name'");
  }
  f.name = j["name"].get<std::string>();
  f.dim = get_int(j, "dim", origin);
  if (f.dim < 0) fail(origin, "dim must be >= 0");
  f.nilpotency_class = optional_int_from(j, "nilpotency_class", origin);
  f.derived_length = optional_int_from(j, "derived_length", origin);
  if (!j.contains("dims") || !j["dims"].is_object()) {
    fail(origin, "missing 'dims'");
  }
  f.dim_inn = get_int(j["dims"], "inn", origin);
  f.dim_caid = get_int(j["dims"], "caid", origin);
  f.dim_aid = get_int(j["dims"], "aid", origin);
  f.dim_der = get_int(j["dims"], "der", origin);
  if (f.dim_inn < 0 || f.dim_inn > f.dim_caid || f.dim_caid > f.dim_aid ||
      f.dim_aid > f.dim_der) {
    fail(origin,
         "dimension chain must satisfy 0 <= inn <= caid <= aid <= der");
  }
  if (!j.contains("aid_status") || !j["aid_status"].is_string()) {
    fail(origin, "missing 'aid_status'");
  }
  f.aid_status = j["aid_status"].get<std::string>();
  if (f.aid_status != "exact" && f.aid_status != "bracketed") {
    fail(origin, "aid_status must be 'exact' or 'bracketed'");
  }
  f.dim_aid_lower = optional_int_from(j, "dim_aid_lower", origin);
  f.dim_caid_lower = optional_int_from(j, "dim_caid_lower", origin);

  auto read_basis = [&](const char* key) {
    std::vector<std::vector<std::string>> out;
    if (!j.contains(key) || !j[key].is_array()) {
      fail(origin, std::string("missing '") + key + "'");
    }
    for (const auto& row : j[key]) {
      if (!row.is_array()) fail(origin, "basis entries must be arrays");
      std::vector<std::string> item;
      for (const auto& v : row) {
        if (!v.is_string()) fail(origin, "basis coordinates must be strings");
        item.push_back(v.get<std::string>());
      }
      out.push_back(std::move(item));
    }
    return out;
  };
  f.basis_der = read_basis("basis_der");
  f.basis_inn = read_basis("basis_inn");
  f.basis_aid = read_basis("basis_aid");
  f.basis_caid = read_basis("basis_caid");
  if (int(f.basis_der.size()) != f.dim_der ||
      int(f.basis_inn.size()) != f.dim_inn ||
      int(f.basis_aid.size()) != f.dim_aid ||
      int(f.basis_caid.size()) != f.dim_caid) {
    fail(origin, "basis sizes disagree with the recorded dimensions");
  }

  if (!j.contains("generators") || !j["generators"].is_array()) {
    fail(origin, "missing 'generators'");
  }
  for (const auto& jg : j["generators"]) {
    ReportGenerator g;
    if (!jg.contains("matrix") || !jg["matrix"].is_array()) {
      fail(origin, "generator is missing its matrix");
    }
    for (const auto& row : jg["matrix"]) {
      std::vector<std::string> r;
      for (const auto& v : row) {
        if (!v.is_string()) fail(origin, "matrix entries must be strings");
        r.push_back(v.get<std::string>());
      }
      g.matrix.push_back(std::move(r));
    }
    if (!jg.contains("pretty") || !jg["pretty"].is_string()) {
      fail(origin, "generator is missing 'pretty'");
    }
    g.pretty = jg["pretty"].get<std::string>();
    if (!jg.contains("status") || !jg["status"].is_string()) {
      fail(origin, "generator is missing 'status'");
    }
    g.status = jg["status"].get<std::string>();
    if (g.status != "certified-formula" && g.status != "certified-decision" &&
        g.status != "unverified") {
      fail(origin, "unknown generator status '" + g.status + "'");
    }
    if (!jg.contains("nilpotent") || !jg["nilpotent"].is_boolean()) {
      fail(origin, "generator is missing 'nilpotent'");
    }
    g.nilpotent = jg["nilpotent"].get<bool>();
    if (jg.contains("certificate") && !jg["certificate"].is_null()) {
      std::vector<ReportCertificatePiece> pieces;
      for (const auto& jp : jg["certificate"]) {
        ReportCertificatePiece piece;
        auto strings = [&](const char* key) {
          std::vector<std::string> out;
          if (!jp.contains(key) || !jp[key].is_array()) {
            fail(origin, std::string("certificate piece missing '") + key + "'");
          }
          for (const auto& v : jp[key]) out.push_back(v.get<std::string>());
          return out;
        };
        piece.zero = strings("zero");
        piece.nonzero = strings("nonzero");
        piece.numerators = strings("numerators");
        if (!jp.contains("denominator") || !jp["denominator"].is_string()) {
          fail(origin, "certificate piece missing 'denominator'");
        }
        piece.denominator = jp["denominator"].get<std::string>();
        pieces.push_back(std::move(piece));
      }
      g.certificate = std::move(pieces);
    }
    f.generators.push_back(std::move(g));
  }
  if (j.contains("aid_ideal_in_der") && !j["aid_ideal_in_der"].is_null()) {
    if (!j["aid_ideal_in_der"].is_boolean()) {
      fail(origin, "'aid_ideal_in_der' must be boolean or null");
    }
    f.aid_ideal_in_der = j["aid_ideal_in_der"].get<bool>();
  }
  if (j.contains("samples_used")) {
    f.samples_used = j["samples_used"].get<long>();
  }
  if (j.contains("seed")) f.seed = j["seed"].get<std::uint64_t>();
  return f;
}

ReportFile load_report(const std::string& path) {
  return report_from_json(read_text_file(path), path);
}

void save_report(const ReportFile& report, const std::string& path) {
  write_text_file(path, report_to_json(report));
}

std::string table_header() {
  return "name | c | d | Inn | CAID | AID | Der | non-inner generators";
}

std::string table_row(const std::string& name, const LieAlgebra& L,
                      const DerivationReport& report) {
  auto or_dash = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  std::string gens;
  if (report.non_inner.empty()) {
    gens = "0";
  } else {
    for (std::size_t i = 0; i < report.non_inner.size(); ++i) {
      if (i) gens += ", ";
      gens += matrix_pretty(report.non_inner[i].matrix);
    }
  }
  if (report.status == AidStatus::Bracketed) gens += " (bracketed)";
  return name + " | " + or_dash(L.nilpotency_class()) + " | " +
         or_dash(L.derived_length()) + " | " + std::to_string(report.inn.dim()) +
         " | " + std::to_string(report.caid.dim()) + " | " +
         std::to_string(report.aid.dim()) + " | " +
         std::to_string(report.der.dim()) + " | " + gens;
}

}  // namespace liederiv
