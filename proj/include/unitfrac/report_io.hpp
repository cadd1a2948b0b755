#pragma once

// JSON and CSV encodings of every report type.
//
// Complex numbers are {"re": .., "im": ..}. Big integers are JSON integers
// when they fit in 64 bits and decimal strings otherwise. CSV layouts have a
// fixed column order and always start with a header row.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "unitfrac/analytic.hpp"
#include "unitfrac/exact.hpp"
#include "unitfrac/explorer.hpp"
#include "unitfrac/parametrization.hpp"
#include "unitfrac/search.hpp"

namespace nlohmann {

template <>
struct adl_serializer<unitfrac::BigInt> {
  static void to_json(json& j, const unitfrac::BigInt& v);
  static void from_json(const json& j, unitfrac::BigInt& v);
};

}  // namespace nlohmann

namespace unitfrac {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

void to_json(Json& j, const ProblemParams& p);
void from_json(const Json& j, ProblemParams& p);
void to_json(Json& j, const Decomposition& d);
void from_json(const Json& j, Decomposition& d);
void to_json(Json& j, const SearchBounds& b);
void from_json(const Json& j, SearchBounds& b);
void to_json(Json& j, const Escalation& e);
void from_json(const Json& j, Escalation& e);
void to_json(Json& j, const RangeReport& r);
void from_json(const Json& j, RangeReport& r);
void to_json(Json& j, const DensityReport& r);
void from_json(const Json& j, DensityReport& r);
void to_json(Json& j, const PrecisionConfig& c);
void from_json(const Json& j, PrecisionConfig& c);
void to_json(Json& j, const SumReport& r);
void from_json(const Json& j, SumReport& r);
void to_json(Json& j, const ZeroBracket& z);
void from_json(const Json& j, ZeroBracket& z);
void to_json(Json& j, const ScanResult& r);
void from_json(const Json& j, ScanResult& r);
void to_json(Json& j, const FZeroFamily& f);
void from_json(const Json& j, FZeroFamily& f);
void to_json(Json& j, const ParamTriple& p);
void from_json(const Json& j, ParamTriple& p);

/// A CSV table: header plus rows, all cells pre-formatted.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& out) const;
};

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

CsvTable csv_of(const Decomposition* d, std::int64_t k, std::int64_t n);
CsvTable csv_of(const RangeReport& r);
CsvTable csv_of(const DensityReport& r);
CsvTable csv_of(const SumReport& r);
CsvTable csv_of(const ScanResult& r);
CsvTable csv_of(const FZeroFamily& f, double residual);

}  // namespace unitfrac
