#pragma once

#include <string>

#include "dirnet/certificates.hpp"
#include "dirnet/solver.hpp"
#include "json.hpp"

namespace dirnet {

using Json = nlohmann::ordered_json;

// Parsers throw ParseError on malformed text or schema violations.
Instance parse_instance(const std::string& text);
GeoDigraph parse_network(const std::string& text);
Certificate parse_certificate(const std::string& text);

Json instance_to_json(const Instance& inst);
Json network_to_json(const GeoDigraph& g);
Json certificate_to_json(const Certificate& c);

// Rounds to 12 significant digits for human-facing reports.
double report_number(double v);

Json solve_result_to_json(const SolveResult& r, const Norm& n);

// Validity of a network as an answer for the instance.
Json verify_report(const Instance& inst, const GeoDigraph& g);
Json classify_report(const GeoDigraph& g);

// Sources red, sinks blue, nodes that are both purple, Steiner points hollow; y axis points up.
std::string render_svg(const GeoDigraph& g);

}  // namespace dirnet
