#pragma once

#include <json.hpp>
#include <string>

#include "specht/algebra.hpp"
#include "specht/classifier.hpp"
#include "specht/garnir.hpp"
#include "specht/oracle.hpp"
#include "specht/partition.hpp"
#include "specht/straighten.hpp"

namespace specht::io {

using Json = nlohmann::ordered_json;

/// Whole file as a string; DomainError if it cannot be opened.
std::string read_file(const std::string& path);

/// JSON {"cells": [[i,j],...]} when the text starts with '{', else the ASCII grid.
Diagram parse_diagram_any(const std::string& text);
/// JSON {"boxes": [[i,j],...]}.
BoxSet parse_boxset(const std::string& text);
/// JSON {"columns": [...], "sets": [[[i,j],...],...]}.
GarnirDatum parse_datum(const std::string& text);
/// Either JSON {"entries": [[i,j,label],...]} or rows of labels: one row per
/// line or '/'-separated, '.' for an empty cell, whitespace-separated tokens
/// or one character per cell with {12} for labels past 9.
Tableau parse_tableau(const Diagram& shape, const std::string& text);
/// Labeled cells alone, shape taken from the labels.
Tableau parse_tableau(const std::string& text);

Json to_json(const Cell& c);
Json to_json(const Diagram& d);
Json boxes_json(const BoxSet& b);
Json to_json(const GarnirDatum& g);
Json to_json(const MultiplicityVector& m);
Json to_json(const AlgebraElement& e);
Json to_json(const Tableau& t);
Json to_json(const TransversalResult& r);
/// Certificate DAG: every node has an "id"; a node met again is emitted as {"ref": id}.
Json to_json(const CertificateNode& node);
Json to_json(const Refutation& r);
Json to_json(const Verdict& v);
Json to_json(const FiltrationReport& r);
Json to_json(const StraighteningTrace& t);
Json to_json(const TraceCheck& c);

}  // namespace specht::io
