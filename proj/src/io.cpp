#include "multiflower/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace multiflower {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw input_error(std::string(what) + " is not valid JSON: " + e.what());
  }
}

json coeffs_to_json(const LinearInequality& li) {
  json arr = json::array();
  for (const auto& [v, c] : li.coeffs) arr.push_back({{"vars", v.key}, {"coef", c}});
  return arr;
}

json neighbors_to_json(const std::vector<VertexSet>& sets) {
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(s);
  return arr;
}

}  // namespace

FractionalPoint load_point(std::string_view text) {
  const json doc = parse_json(text, "point file");
  if (!doc.is_object() || !doc.contains("vertices"))
    throw input_error("point file must be an object with \"vertices\"");
  FractionalPoint point;
  try {
    for (const auto& [key, value] : doc.at("vertices").items()) {
      int v;
      try {
        v = std::stoi(key);
      } catch (...) {
        throw input_error("vertex key \"" + key + "\" is not an integer");
      }
      point.values[VarRef::vertex(v)] = value.get<double>();
    }
    if (doc.contains("edges")) {
      for (const auto& entry : doc.at("edges")) {
        if (!entry.contains("vars") || !entry.contains("value"))
          throw input_error("point edge entries need \"vars\" and \"value\"");
        VertexSet e = entry.at("vars").get<VertexSet>();
        point.values[VarRef::edge(std::move(e))] = entry.at("value").get<double>();
      }
    }
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed point file: ") + e.what());
  }
  for (const auto& [v, val] : point.values)
    if (val < -1e-9 || val > 1 + 1e-9)
      throw input_error("point value for " + v.label() + " is outside [0,1]");
  return point;
}

std::string render_point(const FractionalPoint& point, const Hypergraph& h) {
  json doc;
  json vertices = json::object();
  for (int v = 1; v <= h.n; ++v)
    vertices[std::to_string(v)] = point.values.at(VarRef::vertex(v));
  doc["vertices"] = vertices;
  json edges = json::array();
  for (const auto& e : h.edges)
    edges.push_back({{"vars", e}, {"value", point.values.at(VarRef::edge(e))}});
  doc["edges"] = edges;
  return doc.dump(2) + "\n";
}

PartitionMap load_partition_map(std::string_view text) {
  const json doc = parse_json(text, "RMC file");
  if (!doc.is_object() || !doc.contains("partitions"))
    throw input_error("RMC file must be an object with \"partitions\"");
  PartitionMap map;
  try {
    for (const auto& entry : doc.at("partitions")) {
      if (!entry.contains("set") || !entry.contains("left") || !entry.contains("right"))
        throw input_error("partition entries need \"set\", \"left\" and \"right\"");
      map.add(entry.at("set").get<VertexSet>(), entry.at("left").get<VertexSet>(),
              entry.at("right").get<VertexSet>());
    }
  } catch (const json::exception& e) {
    throw input_error(std::string("malformed RMC file: ") + e.what());
  }
  return map;
}

std::string render_partition_map(const PartitionMap& map) {
  json arr = json::array();
  for (const auto& [l, jk] : map.entries)
    arr.push_back({{"set", l}, {"left", jk.first}, {"right", jk.second}});
  json doc;
  doc["partitions"] = arr;
  return doc.dump(2) + "\n";
}

std::string cut_to_json_line(const SeparatedCut& cut) {
  json obj;
  obj["tag"] = to_string(cut.ineq.tag);
  if (cut.ineq.meta) {
    obj["center"] = cut.ineq.meta->center;
    obj["neighbors"] = neighbors_to_json(cut.ineq.meta->neighbors);
  }
  obj["coefficients"] = coeffs_to_json(cut.ineq);
  obj["rhs"] = cut.ineq.rhs;
  obj["violation"] = cut.violation;
  return obj.dump();
}

std::string system_to_json(const std::vector<LinearInequality>& system) {
  json rows = json::array();
  for (const auto& li : system) {
    json obj;
    obj["tag"] = to_string(li.tag);
    obj["coefficients"] = coeffs_to_json(li);
    obj["rhs"] = li.rhs;
    if (li.meta) {
      if (li.meta->proj_class >= 0) obj["class"] = "proj" + std::to_string(li.meta->proj_class);
      if (!li.meta->center.empty()) obj["center"] = li.meta->center;
      if (!li.meta->neighbors.empty()) obj["parts"] = neighbors_to_json(li.meta->neighbors);
      if (!li.meta->witnesses.empty()) {
        json w = json::array();
        for (const auto& [part, witness] : li.meta->witnesses)
          w.push_back({{"part", part}, {"witness", witness}});
        obj["witnesses"] = w;
      }
    }
    rows.push_back(std::move(obj));
  }
  json doc;
  doc["inequalities"] = rows;
  return doc.dump(2) + "\n";
}

std::string report_to_json(const CompareReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"method", row.method},
                    {"bound", row.bound},
                    {"n_vars", row.n_vars},
                    {"n_ineqs", row.n_ineqs},
                    {"rounds", row.rounds},
                    {"cuts_added", row.cuts_added},
                    {"ms", row.ms}});
  }
  json doc;
  doc["instance"] = report.instance_id;
  doc["rows"] = rows;
  if (report.exact) doc["exact"] = *report.exact;
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const CompareReport& report) {
  std::ostringstream out;
  out << "method,bound,n_vars,n_ineqs,rounds,ms\n";
  out.precision(17);
  for (const auto& row : report.rows)
    out << row.method << "," << row.bound << "," << row.n_vars << "," << row.n_ineqs << ","
        << row.rounds << "," << row.ms << "\n";
  if (report.exact) out << "exact," << *report.exact << "," << 0 << "," << 0 << "," << 0 << ",0\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write " + path);
  out << contents;
}

}  // namespace multiflower
