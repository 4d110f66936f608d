#pragma once

#include <string>
#include <vector>

#include "tabseq/arc_diagram.hpp"
#include "tabseq/series.hpp"
#include "tabseq/tableau.hpp"
#include "tabseq/walks.hpp"

namespace tabseq {

// {"kind": "...", "shapes": [[...], ...]}
std::string tableau_to_json(const TableauSequence& seq);
TableauSequence tableau_from_json(const std::string& text);

// {"n": int, "closed": [[i,j],...], "open": [i,...], "kind": "partition"|"matching"}
std::string diagram_to_json(const OpenArcDiagram& d);
OpenArcDiagram diagram_from_json(const std::string& text);

// {"start": [..], "steps": [[coord,dir] | 0, ...]} with 0 encoding a stay step.
std::string walk_to_json(const LatticeWalk& walk);
LatticeWalk walk_from_json(const std::string& text);

// {"name": "...", "flavor": "ogf|egf", "order": N, "coeffs": ["p/q", ...]}
std::string series_to_json(const std::string& name, const UniSeries& s);

std::string tableau_list_to_json(const std::vector<TableauSequence>& seqs);
std::string diagram_list_to_json(const std::vector<OpenArcDiagram>& ds);
std::string walk_list_to_json(const std::vector<LatticeWalk>& walks);

}  // namespace tabseq
