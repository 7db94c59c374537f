#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "sglde/em.hpp"
#include "sglde/estimators.hpp"
#include "sglde/types.hpp"

#include <json.hpp>

namespace sglde {

// Double formatting at 17 significant digits: round-trip exact.
std::string fmt17(double x);

// Optional provenance lines written as leading '#' comments in CSV files and
// as a "meta" object in JSON files; readers skip them.
using Metadata = std::map<std::string, std::string>;

// --- CSV, header "t,x" ---
void write_series_csv(std::ostream& os, const Series& s, const Metadata& meta = {});
void write_path_csv(std::ostream& os, const Path& p, const Metadata& meta = {});
void write_observations_csv(std::ostream& os, const ObservationSet& o, const Metadata& meta = {});

// Reads a t,x file as a Series (any strictly increasing mesh).
Series read_series_csv(std::istream& is);
// Requires a uniform mesh (validated against the reconstructed grid).
Path read_path_csv(std::istream& is);
ObservationSet read_observations_csv(std::istream& is);

// --- JSON ---
nlohmann::json path_to_json(const Path& p);
Path path_from_json(const nlohmann::json& j);
nlohmann::json observations_to_json(const ObservationSet& o);
ObservationSet observations_from_json(const nlohmann::json& j);
nlohmann::json theta_estimate_to_json(const ThetaEstimate& e);

// --- EM trace, columns iter,alpha,m,sigma,fallback_fraction ---
void write_em_trace_csv(std::ostream& os, const EmTrace& trace, const Metadata& meta = {});
nlohmann::json em_trace_to_json(const EmTrace& trace);

}  // namespace sglde
