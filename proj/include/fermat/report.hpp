#pragma once

#include <string>

#include "fermat/invariants.hpp"
#include "fermat/table.hpp"

namespace fermat {

enum class OutputFormat { Json, Csv, Text };
OutputFormat parse_output_format(const std::string& text);

/// JSON renderings use fixed key order and two-space indentation, so identical
/// results give byte-identical output. Polynomials appear in grammar text.
std::string to_json(const InvariantReport& report);
std::string to_json(const ContainmentCertificate& cert);
std::string to_json(const WitnessCheck& check);
std::string to_json(const WaldschmidtSample& sample);
std::string to_json(const ResurgenceScan& scan);
std::string to_json(const TableResult& table);

std::string to_text(const InvariantReport& report);
std::string to_text(const ContainmentCertificate& cert);
std::string to_text(const WitnessCheck& check);
std::string to_text(const WaldschmidtSample& sample);
std::string to_text(const ResurgenceScan& scan);
std::string to_text(const TableResult& table);

inline constexpr const char* kTableCsvHeader = "n,m,alpha,predicted,match,method,seconds";
/// Header plus one row per cell; skipped cells carry `skipped` in alpha and match.
std::string to_csv(const TableResult& table);

}  // namespace fermat
