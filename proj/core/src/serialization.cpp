#include "twosided/serialization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "twosided/error.hpp"

namespace twosided {

namespace {

using json = nlohmann::ordered_json;

bool is_scalar(const json& j) { return !j.is_object() && !j.is_array(); }

void write(const json& j, std::string& out, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (j.type()) {
    case json::value_t::number_float: {
      double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
      } else {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        out += buf;
      }
      return;
    }
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(key).dump() + ": ";
        write(value, out, depth + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case json::value_t::array: {
      const bool inline_array = std::all_of(j.begin(), j.end(), is_scalar);
      if (j.empty() || inline_array) {
        out += "[";
        for (std::size_t p = 0; p < j.size(); ++p) {
          if (p) out += ", ";
          write(j[p], out, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t p = 0; p < j.size(); ++p) {
        if (p) out += ",\n";
        out += pad;
        write(j[p], out, depth + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    default:
      out += j.dump();
  }
}

std::string dump(const json& j) {
  std::string out;
  write(j, out, 0);
  out += "\n";
  return out;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) throw ValidationError(std::string("missing field '") + name + "'");
  try {
    if constexpr (std::is_unsigned_v<T>) {
      const json& v = obj.at(name);
      if (!v.is_number_integer() || v.get<long long>() < 0) throw ValidationError("");
      return v.get<T>();
    } else {
      return obj.at(name).get<T>();
    }
  } catch (const std::exception&) {
    throw ValidationError(std::string("field '") + name + "' has the wrong type");
  }
}

json index_array(const IndexSet& s) { return json(std::vector<Index>(s.begin(), s.end())); }

json matching_json(const Matching& m) {
  json arr = json::array();
  for (const auto& [user, creators] : m) arr.push_back({{"user", user}, {"creators", index_array(creators)}});
  return arr;
}

json vectors_json(const std::vector<TypeVector>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(v.coords());
  return arr;
}

std::vector<TypeVector> vectors_from(const json& arr, const char* name) {
  if (!arr.is_array()) throw ValidationError(std::string("field '") + name + "' must be an array");
  std::vector<TypeVector> out;
  for (const auto& row : arr) {
    if (!row.is_array() || !std::all_of(row.begin(), row.end(), [](const json& x) { return x.is_number(); })) {
      throw ValidationError(std::string("field '") + name + "' must hold arrays of numbers");
    }
    out.emplace_back(row.get<std::vector<double>>());
  }
  return out;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json j = {{"dim", inst.dim()},
            {"k", inst.k()},
            {"e_bar", inst.e_bar()},
            {"a_bar", inst.a_bar()},
            {"users", vectors_json(inst.users())},
            {"creators", vectors_json(inst.creators())}};
  return dump(j);
}

Instance instance_from_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_object()) throw ValidationError("instance JSON must be an object");
  if (!j.contains("users") || !j.contains("creators")) throw ValidationError("instance JSON needs users and creators");
  return Instance(field<std::size_t>(j, "dim"), field<std::size_t>(j, "k"), field<double>(j, "e_bar"),
                  field<std::size_t>(j, "a_bar"), vectors_from(j["users"], "users"),
                  vectors_from(j["creators"], "creators"));
}

std::string report_to_json(const StableSetReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"kind", to_string(v.kind)}, {"index", v.index}, {"reason", v.reason}});
  }
  json j = {{"engagement", report.engagement},
            {"is_stable", report.is_stable},
            {"users", index_array(report.state.users)},
            {"creators", index_array(report.state.creators)},
            {"matching", matching_json(report.matching)},
            {"violations", violations}};
  return dump(j);
}

std::string trajectory_to_json(const Trajectory& traj, Algorithm alg) {
  json steps = json::array();
  for (std::size_t t = 0; t < traj.steps.size(); ++t) {
    const auto& s = traj.steps[t];
    steps.push_back({{"t", t},
                     {"users", index_array(s.state.users)},
                     {"creators", index_array(s.state.creators)},
                     {"engagement", s.engagement},
                     {"matching", matching_json(s.matching)}});
  }
  json j = {{"algorithm", to_string(alg)},
            {"converged_at", traj.converged_at},
            {"long_term_engagement", traj.long_term_engagement},
            {"steps", steps}};
  return dump(j);
}

std::string bound_to_json(const BoundEstimate& bound, std::size_t c, std::size_t k, std::uint64_t trials,
                          std::uint64_t seed) {
  json j = {{"c", c}, {"k", k}, {"trials", trials}, {"seed", seed},
            {"estimate", bound.estimate}, {"std_error", bound.std_error}};
  return dump(j);
}

std::vector<GridPoint> grid_from_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_array()) throw ValidationError("grid JSON must be a list of points");
  std::vector<GridPoint> points;
  for (const auto& p : j) {
    GridPoint pt;
    pt.u = field<std::size_t>(p, "u");
    pt.c = field<std::size_t>(p, "c");
    pt.k = field<std::size_t>(p, "k");
    pt.a_bar = field<std::size_t>(p, "a_bar");
    pt.dim = field<std::size_t>(p, "dim");
    pt.e_m = field<double>(p, "e_m");
    pt.trials = field<std::size_t>(p, "trials");
    for (const auto& name : field<std::vector<std::string>>(p, "algorithms")) {
      pt.algorithms.push_back(parse_algorithm(name));
    }
    points.push_back(std::move(pt));
  }
  return points;
}

}  // namespace twosided
