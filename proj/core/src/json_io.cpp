#include "tabseq/json_io.hpp"

#include <json.hpp>

#include "tabseq/error.hpp"

namespace tabseq {

using nlohmann::json;

namespace {

json tableau_json(const TableauSequence& seq) {
  json shapes = json::array();
  for (const Partition& p : seq.shapes) shapes.push_back(p.parts());
  return json{{"kind", tableau_kind_name(seq.kind)}, {"shapes", shapes}};
}

json diagram_json(const OpenArcDiagram& d) {
  json closed = json::array();
  for (const auto& [i, j] : d.closed_arcs()) closed.push_back(json::array({i, j}));
  return json{{"n", d.n()},
              {"closed", closed},
              {"open", d.open_arcs()},
              {"kind", diagram_kind_name(d.kind())}};
}

json walk_json(const LatticeWalk& w) {
  json steps = json::array();
  for (const Step& s : w.steps) {
    if (s.stay) {
      steps.push_back(0);
    } else {
      steps.push_back(json::array({s.coord + 1, s.dir}));
    }
  }
  return json{{"start", w.start}, {"steps", steps}};
}

}  // namespace

std::string tableau_to_json(const TableauSequence& seq) { return tableau_json(seq).dump(); }

TableauSequence tableau_from_json(const std::string& text) {
  const json j = json::parse(text);
  TableauSequence seq;
  const auto kind = tableau_kind_from_name(j.at("kind").get<std::string>());
  if (!kind) throw Error(ErrorCode::InvalidArgument, "unknown tableau kind");
  seq.kind = *kind;
  for (const auto& shape : j.at("shapes")) {
    seq.shapes.emplace_back(shape.get<std::vector<int>>());
  }
  return seq;
}

std::string diagram_to_json(const OpenArcDiagram& d) { return diagram_json(d).dump(); }

OpenArcDiagram diagram_from_json(const std::string& text) {
  const json j = json::parse(text);
  const auto kind = diagram_kind_from_name(j.at("kind").get<std::string>());
  if (!kind) throw Error(ErrorCode::InvalidArgument, "unknown diagram kind");
  std::vector<Arc> closed;
  for (const auto& arc : j.at("closed")) {
    closed.emplace_back(arc.at(0).get<int>(), arc.at(1).get<int>());
  }
  return OpenArcDiagram(j.at("n").get<int>(), std::move(closed),
                        j.at("open").get<std::vector<int>>(), *kind);
}

std::string walk_to_json(const LatticeWalk& walk) { return walk_json(walk).dump(); }

LatticeWalk walk_from_json(const std::string& text) {
  const json j = json::parse(text);
  LatticeWalk w;
  w.start = j.at("start").get<std::vector<int>>();
  for (const auto& s : j.at("steps")) {
    if (s.is_number()) {
      w.steps.push_back(Step::make_stay());
    } else {
      w.steps.push_back(Step::unit(s.at(0).get<int>() - 1, s.at(1).get<int>()));
    }
  }
  return w;
}

std::string series_to_json(const std::string& name, const UniSeries& s) {
  json coeffs = json::array();
  for (int n = 0; n <= s.order(); ++n) coeffs.push_back(rational_to_string(s.coeff(n)));
  return json{{"name", name},
              {"flavor", s.flavor() == SeriesFlavor::OGF ? "ogf" : "egf"},
              {"order", s.order()},
              {"coeffs", coeffs}}
      .dump();
}

std::string tableau_list_to_json(const std::vector<TableauSequence>& seqs) {
  json out = json::array();
  for (const auto& s : seqs) out.push_back(tableau_json(s));
  return out.dump();
}

std::string diagram_list_to_json(const std::vector<OpenArcDiagram>& ds) {
  json out = json::array();
  for (const auto& d : ds) out.push_back(diagram_json(d));
  return out.dump();
}

std::string walk_list_to_json(const std::vector<LatticeWalk>& walks) {
  json out = json::array();
  for (const auto& w : walks) out.push_back(walk_json(w));
  return out.dump();
}

}  // namespace tabseq
