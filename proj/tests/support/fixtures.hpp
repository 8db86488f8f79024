#pragma once

// Helpers for loading the committed edge-list fixtures and addressing
// vertices by label instead of internal id.

#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <atomdec/graph.hpp>

namespace testgen {

inline std::string data_path(const std::string& name) {
  return std::string(ATOMDEC_DATA_DIR) + "/" + name;
}

inline atomdec::Graph load_fixture(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing fixture: " + name);
  return atomdec::load_edge_list(in);
}

inline atomdec::VertexId id_of(const atomdec::Graph& g, const std::string& label) {
  auto v = g.find_vertex(label);
  if (!v) throw std::runtime_error("no vertex labeled " + label);
  return *v;
}

inline atomdec::VertexSet by_labels(const atomdec::Graph& g,
                                    std::initializer_list<const char*> labels) {
  std::vector<atomdec::VertexId> ids;
  for (const char* l : labels) ids.push_back(id_of(g, l));
  return atomdec::VertexSet(std::move(ids));
}

}  // namespace testgen
