#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liederiv/derivations.hpp"
#include "liederiv/fp.hpp"
#include "liederiv/lie_algebra.hpp"
#include "liederiv/matrix.hpp"

namespace liederiv {

/// Parsed algebra file: a rational table or a mod-p table, depending on the
/// file's field entry.
struct AlgebraInput {
  std::string field = "Q";
  std::optional<LieAlgebra> rational;
  std::optional<FpLieAlgebra> modular;
};

/// Loads and validates an algebra file (format_version 1). Throws
/// std::invalid_argument with position information on malformed input and
/// with the violating triple on a non-Jacobi table.
AlgebraInput load_algebra(const std::string& path);
AlgebraInput parse_algebra(const std::string& text, const std::string& origin);

std::string algebra_to_json(const LieAlgebra& L);
void save_algebra(const LieAlgebra& L, const std::string& path);

Matrix parse_matrix(const std::string& text, const std::string& origin);
Matrix load_matrix(const std::string& path);
std::string matrix_to_json(const Matrix& m);
void save_matrix(const Matrix& m, const std::string& path);

/// Sparse rendering of a matrix in the elementary-matrix basis, e.g.
/// "E_{5,2} - 2 E_{1,1}" (1-based row, column).
std::string matrix_pretty(const Matrix& m);

struct ReportCertificatePiece {
  std::vector<std::string> zero;
  std::vector<std::string> nonzero;
  std::vector<std::string> numerators;
  std::string denominator;

  bool operator==(const ReportCertificatePiece&) const = default;
};

struct ReportGenerator {
  std::vector<std::vector<std::string>> matrix;
  std::string pretty;
  std::string status;  // certified-formula | certified-decision | unverified
  bool nilpotent = false;
  std::optional<std::vector<ReportCertificatePiece>> certificate;

  bool operator==(const ReportGenerator&) const = default;
};

/// Flat, serialization-friendly mirror of a derivation report. Loading and
/// saving this struct round-trips losslessly.
struct ReportFile {
  int format_version = 1;
  std::string name;
  int dim = 0;
  std::optional<int> nilpotency_class;
  std::optional<int> derived_length;
  int dim_inn = 0;
  int dim_caid = 0;
  int dim_aid = 0;
  int dim_der = 0;
  std::string aid_status;  // exact | bracketed
  std::optional<int> dim_aid_lower;
  std::optional<int> dim_caid_lower;
  std::vector<std::vector<std::string>> basis_der;
  std::vector<std::vector<std::string>> basis_inn;
  std::vector<std::vector<std::string>> basis_aid;
  std::vector<std::vector<std::string>> basis_caid;
  std::vector<ReportGenerator> generators;
  std::optional<bool> aid_ideal_in_der;
  long samples_used = 0;
  std::uint64_t seed = 0;

  bool operator==(const ReportFile&) const = default;
};

ReportFile make_report_file(const std::string& name, const LieAlgebra& L,
                            const DerivationReport& report,
                            std::uint64_t seed);
std::string report_to_json(const ReportFile& report);
/// Parses and validates a report (format_version, status keyword, dimension
/// chain Inn <= CAID <= AID <= Der). Throws std::invalid_argument on defects.
ReportFile report_from_json(const std::string& text, const std::string& origin);
ReportFile load_report(const std::string& path);
void save_report(const ReportFile& report, const std::string& path);

/// One table line per algebra: name, nilpotency class, derived length and
/// the four dimensions, plus the printed non-inner generators.
std::string table_header();
std::string table_row(const std::string& name, const LieAlgebra& L,
                      const DerivationReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace liederiv
