#include "saxlkit/certificate.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace saxlkit {

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

json node_to_json(const Certificate& c) {
  json j;
  j["rule"] = to_string(c.rule);
  j["alpha"] = c.alpha.to_string();
  j["beta"] = c.beta.to_string();
  switch (c.rule) {
    case Rule::BruteForce:
      j["value"] = c.value.to_string();
      j["source"] = to_string(c.source);
      break;
    case Rule::Axiom:
      j["name"] = c.name;
      j["citation"] = c.citation;
      break;
    default: {
      json kids = json::array();
      for (const auto& k : c.children) kids.push_back(node_to_json(*k));
      j["children"] = std::move(kids);
    }
  }
  return j;
}

Rule parse_rule(const std::string& s, const std::string& path) {
  for (Rule r : {Rule::BruteForce, Rule::Axiom, Rule::Semigroup, Rule::VerticalSum, Rule::Transpose})
    if (s == to_string(r)) return r;
  throw CertificateError(path + ": unknown rule '" + s + "'");
}

std::string get_string(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key) || !j[key].is_string()) throw CertificateError(path + ": missing string field '" + key + "'");
  return j[key].get<std::string>();
}

Partition get_partition(const json& j, const char* key, const std::string& path) {
  try {
    return Partition::parse(get_string(j, key, path));
  } catch (const std::invalid_argument& e) {
    throw CertificateError(path + ": bad partition in '" + key + "': " + e.what());
  }
}

CertPtr node_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw CertificateError(path + ": node is not an object");
  auto c = std::make_shared<Certificate>();
  c->rule = parse_rule(get_string(j, "rule", path), path);
  c->alpha = get_partition(j, "alpha", path);
  c->beta = get_partition(j, "beta", path);
  switch (c->rule) {
    case Rule::BruteForce: {
      try {
        c->value = CharInt::parse(get_string(j, "value", path));
      } catch (const std::invalid_argument&) {
        throw CertificateError(path + ": bad coefficient value");
      }
      const std::string src = get_string(j, "source", path);
      if (src == "computed") c->source = LeafSource::Computed;
      else if (src == "manifest") c->source = LeafSource::Manifest;
      else throw CertificateError(path + ": unknown leaf source '" + src + "'");
      break;
    }
    case Rule::Axiom:
      c->name = get_string(j, "name", path);
      c->citation = get_string(j, "citation", path);
      break;
    default: {
      if (!j.contains("children") || !j["children"].is_array())
        throw CertificateError(path + ": missing children array");
      const auto& kids = j["children"];
      for (std::size_t i = 0; i < kids.size(); ++i)
        c->children.push_back(node_from_json(kids[i], path + "/children[" + std::to_string(i) + "]"));
    }
  }
  return c;
}

}  // namespace

std::string emit_certificate(const Certificate& c) {
  json j;
  j["v"] = kSchemaVersion;
  json body = node_to_json(c);
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  return j.dump(1) + "\n";
}

CertPtr parse_certificate(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateError(std::string("root: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("v") || j["v"] != kSchemaVersion)
    throw CertificateError("root: unsupported or missing schema version (expected v:1)");
  return node_from_json(j, "root");
}

CertPtr load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_certificate(ss.str());
}

void save_certificate(const Certificate& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << emit_certificate(c);
}

Manifest Manifest::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open manifest " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CertificateError(std::string("manifest: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("v", 0) != kSchemaVersion) throw CertificateError("manifest: expected v:1");
  Manifest m;
  m.note = j.value("note", std::string());
  for (const auto& e : j.at("entries")) {
    m.add(Partition::parse(e.at("alpha").get<std::string>()), Partition::parse(e.at("beta").get<std::string>()),
          CharInt::parse(e.at("value").get<std::string>()));
  }
  return m;
}

void Manifest::save(const std::string& path) const {
  json j;
  j["v"] = kSchemaVersion;
  j["note"] = note;
  json entries = json::array();
  for (const auto& [key, value] : entries_) {
    json e;
    e["alpha"] = key.first.to_string();
    e["beta"] = key.second.to_string();
    e["value"] = value.to_string();
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot write manifest " + path);
  out << j.dump(1) << "\n";
}

}  // namespace saxlkit
