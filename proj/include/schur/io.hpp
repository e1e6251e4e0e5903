#pragma once

#include <string>

#include <json.hpp>

#include "schur/lr.hpp"
#include "schur/partition.hpp"
#include "schur/schur_nonneg.hpp"
#include "schur/tableau.hpp"

namespace schur {

/// Comma-separated decimal parts, always the full n-part form.
std::string format_partition(const Partition& p);
std::string format_int_sequence(const std::vector<int>& v);

/// Parses comma-separated non-negative decimals at rank n; trailing
/// zeros optional, the literal `0` is the empty partition. Throws
/// ParseError on malformed text, plus the partition constructor errors.
Partition parse_partition(const std::string& text, int n);

/// One line per row; inner boxes shown as dots.
std::string format_tableau(const Tableau& t);

/// One `partition: coefficient` line per term, lex-decreasing.
std::string format_expansion(const SchurExpansion& e);

nlohmann::json json_partition(const Partition& p);
nlohmann::json json_tableau(const Tableau& t);
nlohmann::json json_expansion(const SchurExpansion& e);
nlohmann::json json_certificate(const SnnCertificate& c);

const char* to_string(SnnCase c);
const char* to_string(SnnDirection d);

}  // namespace schur
