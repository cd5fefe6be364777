// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "submax/instance.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "submax/errors.hpp"

namespace submax {
namespace {

constexpr const char* kMagic = "submax-instance v1";

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

struct KvEntry {
  std::string key;
  std::string value;
};

struct KvSection {
  std::string name;
  std::vector<KvEntry> entries;
};

struct KvDocument {
  std::vector<KvSection> sections;  // sections[0] is the unnamed preamble

  const KvSection* find(const std::string& name) const {
    for (const auto& s : sections) {
      if (s.name == name) return &s;
    }
    return nullptr;
  }
};

KvDocument parse_document(std::istream& in) {
  KvDocument doc;
  doc.sections.push_back({"", {}});
  std::string line;
  std::size_t line_no = 0;
  bool magic_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (!magic_seen) {
      if (t != kMagic) {
        throw ParseError("instance: expected \"" + std::string(kMagic) + "\" on line " +
                         std::to_string(line_no));
      }
      magic_seen = true;
      continue;
    }
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError("instance: unterminated section header on line " +
                                            std::to_string(line_no));
      doc.sections.push_back({trim(t.substr(1, t.size() - 2)), {}});
      continue;
    }
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ParseError("instance: expected key = value on line " + std::to_string(line_no));
    }
    doc.sections.back().entries.push_back({trim(t.substr(0, eq)), trim(t.substr(eq + 1))});
  }
  if (!magic_seen) throw ParseError("instance: missing version line");
  return doc;
}

class SectionView {
 public:
  explicit SectionView(const KvSection* section) : section_(section) {}

  bool present() const { return section_ != nullptr; }

  std::optional<std::string> get(const std::string& key) const {
    if (!section_) return std::nullopt;
    for (const auto& e : section_->entries) {
      if (e.key == key) return e.value;
    }
    return std::nullopt;
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) {
      throw ParseError("instance: missing key \"" + key + "\" in section [" +
                       (section_ ? section_->name : "?") + "]");
    }
    return *v;
  }

  std::vector<std::string> all(const std::string& key) const {
    std::vector<std::string> out;
    if (!section_) return out;
    for (const auto& e : section_->entries) {
      if (e.key == key) out.push_back(e.value);
    }
    return out;
  }

 private:
  const KvSection* section_;
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_size(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument("");
    return static_cast<std::size_t>(v);
  } catch (...) {
    throw ParseError("instance: " + what + ": expected a non-negative integer, got \"" + s +
                     "\"");
  }
}

double parse_real(const std::string& s, const std::string& what) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + s.size() || s.empty()) {
    throw ParseError("instance: " + what + ": expected a real number, got \"" + s + "\"");
  }
  return v;
}

std::vector<double> parse_reals(const std::string& s, const std::string& what) {
  std::vector<double> out;
  for (const auto& tok : split_ws(s)) out.push_back(parse_real(tok, what));
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s, const std::string& what) {
  std::vector<std::size_t> out;
  for (const auto& tok : split_ws(s)) out.push_back(parse_size(tok, what));
  return out;
}

Graph parse_edges(const SectionView& section, std::size_t vertices, const std::string& what) {
  std::vector<Graph::Edge> edges;
  for (const auto& value : section.all("edge")) {
    auto parts = parse_sizes(value, what + " edge");
    if (parts.size() != 2) throw ParseError("instance: " + what + ": edge needs \"u v\"");
    edges.emplace_back(parts[0], parts[1]);
  }
  try {
    return Graph(vertices, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError("instance: " + what + ": " + e.what());
  }
}

FunctionSpec parse_function(const SectionView& section, std::size_t n) {
  std::string family = section.require("family");
  if (family == "modular") {
    return ModularFunction{parse_reals(section.require("weights"), "modular weights")};
  }
  if (family == "coverage") {
    CoverageFunction f;
    f.universe_size = parse_size(section.require("universe"), "coverage universe");
    if (auto w = section.get("item_weights")) f.item_weights = parse_reals(*w, "item weights");
    f.covers.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      if (auto v = section.get("covers." + std::to_string(i))) {
        f.covers[i] = parse_sizes(*v, "covers");
      }
    }
    return f;
  }
  if (family == "cut") {
    CutFunction f;
    f.num_vertices = n;
    for (const auto& value : section.all("edge")) {
      auto parts = split_ws(value);
      if (parts.size() != 2 && parts.size() != 3) {
        throw ParseError("instance: cut: edge needs \"u v\" or \"u v weight\"");
      }
      CutFunction::WeightedEdge e{parse_size(parts[0], "cut edge"),
                                  parse_size(parts[1], "cut edge"),
                                  parts.size() == 3 ? parse_real(parts[2], "cut weight") : 1.0};
      f.edges.push_back(e);
    }
    return f;
  }
  if (family == "phi_objective") {
    return PhiObjective{parse_size(section.require("n_vertices"), "phi n_vertices")};
  }
  if (family == "facility_location") {
    FacilityLocationFunction f;
    std::size_t clients = parse_size(section.require("clients"), "facility clients");
    for (std::size_t c = 0; c < clients; ++c) {
      f.benefit.push_back(
          parse_reals(section.require("benefit." + std::to_string(c)), "facility benefit"));
    }
    return f;
  }
  throw ParseError("instance: unknown function family \"" + family + "\"");
}

SystemSpec parse_system(const KvDocument& doc, const SectionView& section,
                        const std::string& section_name, std::size_t n, bool allow_members) {
  std::string family = section.require("family");
  if (family == "cardinality") {
    return CardinalitySystem{parse_size(section.require("k"), "cardinality k")};
  }
  if (family == "partition_matroid") {
    PartitionMatroid sys;
    sys.block_of = parse_sizes(section.require("blocks"), "partition blocks");
    sys.capacity = parse_sizes(section.require("capacities"), "partition capacities");
    return sys;
  }
  if (family == "matching") {
    std::size_t hv = parse_size(section.require("host_vertices"), "matching host_vertices");
    return MatchingSystem{parse_edges(section, hv, "matching")};
  }
  if (family == "explicit") {
    ExplicitSystem sys;
    for (const auto& value : section.all("basis")) {
      ElementSet basis(n);
      for (std::size_t e : parse_sizes(value, "explicit basis")) {
        if (e >= n) throw ParseError("instance: explicit basis element out of range");
        basis.add(e);
      }
      sys.bases.push_back(basis);
    }
    return sys;
  }
  if (family == "phi") {
    std::size_t nv = parse_size(section.require("n_vertices"), "phi n_vertices");
    return PhiSystem{parse_edges(section, nv, "phi")};
  }
  if (family == "intersection") {
    if (!allow_members) {
      throw ParseError("instance: nested intersection systems are not supported");
    }
    IntersectionSystem sys;
    std::size_t count = parse_size(section.require("members"), "intersection members");
    for (std::size_t j = 0; j < count; ++j) {
      std::string member_name = section_name + ".member." + std::to_string(j);
      SectionView member(doc.find(member_name));
      if (!member.present()) {
        throw ParseError("instance: missing section [" + member_name + "]");
      }
      sys.members.push_back(
          SystemSpecWrapper{parse_system(doc, member, member_name, n, false)});
    }
    return sys;
  }
  throw ParseError("instance: unknown system family \"" + family + "\"");
}

void serialize_function(std::ostringstream& out, const FunctionSpec& spec, std::size_t n) {
  out << "[function]\n";
  out << "family = " << function_family(spec) << "\n";
  if (const auto* f = std::get_if<ModularFunction>(&spec)) {
    out << "weights =";
    for (double w : f->weights) out << " " << format_real(w);
    out << "\n";
  } else if (const auto* f = std::get_if<CoverageFunction>(&spec)) {
    out << "universe = " << f->universe_size << "\n";
    if (!f->item_weights.empty()) {
      out << "item_weights =";
      for (double w : f->item_weights) out << " " << format_real(w);
      out << "\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (f->covers[i].empty()) continue;
      out << "covers." << i << " =";
      for (std::size_t item : f->covers[i]) out << " " << item;
      out << "\n";
    }
  } else if (const auto* f = std::get_if<CutFunction>(&spec)) {
    for (const auto& e : f->edges) {
      out << "edge = " << e.u << " " << e.v << " " << format_real(e.weight) << "\n";
    }
  } else if (const auto* f = std::get_if<PhiObjective>(&spec)) {
    out << "n_vertices = " << f->num_vertices << "\n";
  } else if (const auto* f = std::get_if<FacilityLocationFunction>(&spec)) {
    out << "clients = " << f->benefit.size() << "\n";
    for (std::size_t c = 0; c < f->benefit.size(); ++c) {
      out << "benefit." << c << " =";
      for (double b : f->benefit[c]) out << " " << format_real(b);
      out << "\n";
    }
  }
}

void serialize_system(std::ostringstream& out, const SystemSpec& spec,
                      const std::string& section_name) {
  out << "[" << section_name << "]\n";
  out << "family = " << system_family(spec) << "\n";
  if (const auto* s = std::get_if<CardinalitySystem>(&spec)) {
    out << "k = " << s->k << "\n";
  } else if (const auto* s = std::get_if<PartitionMatroid>(&spec)) {
    out << "blocks =";
    for (std::size_t b : s->block_of) out << " " << b;
    out << "\ncapacities =";
    for (std::size_t c : s->capacity) out << " " << c;
    out << "\n";
  } else if (const auto* s = std::get_if<MatchingSystem>(&spec)) {
    out << "host_vertices = " << s->host.num_vertices() << "\n";
    for (const auto& [u, v] : s->host.edges()) out << "edge = " << u << " " << v << "\n";
  } else if (const auto* s = std::get_if<ExplicitSystem>(&spec)) {
    for (const auto& basis : s->bases) {
      out << "basis =";
      basis.for_each([&](std::size_t e) { out << " " << e; });
      out << "\n";
    }
  } else if (const auto* s = std::get_if<PhiSystem>(&spec)) {
    out << "n_vertices = " << s->host.num_vertices() << "\n";
    for (const auto& [u, v] : s->host.edges()) out << "edge = " << u << " " << v << "\n";
  } else if (const auto* s = std::get_if<IntersectionSystem>(&spec)) {
    out << "members = " << s->members.size() << "\n";
    for (std::size_t j = 0; j < s->members.size(); ++j) {
      out << "\n";
      serialize_system(out, s->members[j].spec,
                       section_name + ".member." + std::to_string(j));
    }
  }
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Instance parse_instance(std::istream& in) {
  KvDocument doc = parse_document(in);
  SectionView preamble(doc.find(""));
  Instance inst;
  inst.n = parse_size(preamble.require("n"), "n");
  if (auto name = preamble.get("name")) inst.name = *name;
  if (auto p = preamble.get("expected_p")) {
    inst.expected_p = static_cast<int>(parse_size(*p, "expected_p"));
  }
  if (auto labels = preamble.get("labels")) {
    auto parts = split_ws(*labels);
    if (parts.size() != inst.n) throw ParseError("instance: labels must have length n");
    inst.labels = parts;
  }

  SectionView function(doc.find("function"));
  if (!function.present()) throw ParseError("instance: missing [function] section");
  inst.function = parse_function(function, inst.n);

  SectionView system(doc.find("system"));
  if (!system.present()) throw ParseError("instance: missing [system] section");
  inst.system = parse_system(doc, system, "system", inst.n, true);

  // Surface dimension mismatches at load time rather than first evaluation.
  try {
    inst.value_oracle();
    inst.membership_oracle();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return inst;
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("instance: cannot open " + path);
  try {
    return parse_instance(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << kMagic << "\n";
  if (!instance.name.empty()) out << "name = " << instance.name << "\n";
  out << "n = " << instance.n << "\n";
  if (instance.labels) {
    out << "labels =";
    for (const auto& l : *instance.labels) out << " " << l;
    out << "\n";
  }
  if (instance.expected_p) out << "expected_p = " << *instance.expected_p << "\n";
  out << "\n";
  serialize_function(out, instance.function, instance.n);
  out << "\n";
  serialize_system(out, instance.system, "system");
  return out.str();
}

Instance make_phi_instance(const Graph& g, const std::string& name) {
  auto [system, objective] = phi_reduce(g);
  Instance inst;
  inst.name = name;
  inst.n = 2 * g.num_vertices();
  inst.function = objective;
  inst.system = system;
  return inst;
}

}  // namespace submax
