#include "mm/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mm {

namespace {

using Json = nlohmann::ordered_json;

int lineOfOffset(const std::string& text, size_t byte) {
  int line = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

Json parseDocument(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed ") + what + " document (line " +
                               std::to_string(lineOfOffset(text, e.byte)) + "): " + e.what());
  }
}

const Json& field(const Json& obj, const char* key, const std::string& context) {
  if (!obj.is_object())
    fail(ErrorKind::Parse, context + " must be a JSON object");
  auto it = obj.find(key);
  if (it == obj.end())
    fail(ErrorKind::Parse, context + " is missing field '" + key + "'");
  return *it;
}

std::string asString(const Json& v, const std::string& context) {
  if (!v.is_string()) fail(ErrorKind::Parse, context + " must be a string");
  return v.get<std::string>();
}

int asInt(const Json& v, const std::string& context) {
  if (!v.is_number_integer())
    fail(ErrorKind::Parse, context + " must be an integer");
  return v.get<int>();
}

}  // namespace

Instance parseInstance(const std::string& text) {
  const Json doc = parseDocument(text, "instance");
  const Json& housesJson = field(doc, "houses", "instance");
  const Json& applicantsJson = field(doc, "applicants", "instance");
  if (!housesJson.is_array()) fail(ErrorKind::Parse, "'houses' must be an array");
  if (!applicantsJson.is_array()) fail(ErrorKind::Parse, "'applicants' must be an array");

  std::vector<HouseSpec> houses;
  for (const auto& hj : housesJson) {
    HouseSpec h;
    h.id = asString(field(hj, "id", "house"), "house id");
    h.capacity = asInt(field(hj, "capacity", "house '" + h.id + "'"), "house capacity");
    houses.push_back(std::move(h));
  }

  // id -> declaration index, for resolving preference lists
  std::vector<ApplicantSpec> applicants;
  auto houseIdx = [&](const std::string& id) -> int {
    for (size_t i = 0; i < houses.size(); ++i)
      if (houses[i].id == id) return static_cast<int>(i);
    return -1;
  };

  for (const auto& aj : applicantsJson) {
    ApplicantSpec a;
    a.id = asString(field(aj, "id", "applicant"), "applicant id");
    a.capacity = asInt(field(aj, "capacity", "applicant '" + a.id + "'"), "applicant capacity");
    const Json& prefs = field(aj, "prefs", "applicant '" + a.id + "'");
    if (!prefs.is_array())
      fail(ErrorKind::Parse, "'prefs' of applicant '" + a.id + "' must be an array");
    for (const auto& pj : prefs) {
      const std::string hid = asString(pj, "preference entry");
      const int h = houseIdx(hid);
      if (h < 0)
        fail(ErrorKind::Validation,
             "applicant '" + a.id + "' lists unknown house '" + hid + "'");
      a.prefs.push_back(h);
    }
    applicants.push_back(std::move(a));
  }

  return Instance(std::move(applicants), std::move(houses));
}

std::string serializeInstance(const Instance& I) {
  Json doc = Json::object();
  doc["applicants"] = Json::array();
  for (int a = 0; a < I.numApplicants(); ++a) {
    const auto& spec = I.applicant(a);
    Json aj = Json::object();
    aj["id"] = spec.id;
    aj["capacity"] = spec.capacity;
    Json prefs = Json::array();
    for (int h : spec.prefs) prefs.push_back(I.house(h).id);
    aj["prefs"] = std::move(prefs);
    doc["applicants"].push_back(std::move(aj));
  }
  doc["houses"] = Json::array();
  for (int h = 0; h < I.numHouses(); ++h) {
    Json hj = Json::object();
    hj["id"] = I.house(h).id;
    hj["capacity"] = I.house(h).capacity;
    doc["houses"].push_back(std::move(hj));
  }
  return doc.dump();
}

Matching parseMatching(const Instance& I, const std::string& text) {
  const Json doc = parseDocument(text, "matching");
  const Json& edgesJson = field(doc, "edges", "matching");
  if (!edgesJson.is_array()) fail(ErrorKind::Parse, "'edges' must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& ej : edgesJson) {
    if (!ej.is_array() || ej.size() != 2)
      fail(ErrorKind::Parse, "each matching edge must be a [applicant, house] pair");
    const std::string aid = asString(ej[0], "edge applicant");
    const std::string hid = asString(ej[1], "edge house");
    const auto a = I.applicantIndex(aid);
    if (!a) fail(ErrorKind::Validation, "matching references unknown applicant '" + aid + "'");
    const auto h = I.houseIndex(hid);
    if (!h) fail(ErrorKind::Validation, "matching references unknown house '" + hid + "'");
    edges.emplace_back(*a, *h);
  }
  try {
    return makeMatching(I, std::move(edges));
  } catch (const Error& e) {
    fail(ErrorKind::Validation, e.what());
  }
}

std::string serializeMatching(const Instance& I, const Matching& M) {
  validateMatching(I, M);
  Json doc = Json::object();
  Json edges = Json::array();
  for (const auto& [a, h] : M.edges)
    edges.push_back(Json::array({I.applicant(a).id, I.house(h).id}));
  doc["edges"] = std::move(edges);
  return doc.dump();
}

CapacityChange parseCapacityChange(const Instance& I, const std::string& text) {
  const Json doc = parseDocument(text, "capacity change");
  const Json& deltaJson = field(doc, "delta", "capacity change");
  if (!deltaJson.is_object()) fail(ErrorKind::Parse, "'delta' must be an object");
  CapacityChange change = zeroChange(I);
  for (auto it = deltaJson.begin(); it != deltaJson.end(); ++it) {
    const auto h = I.houseIndex(it.key());
    if (!h)
      fail(ErrorKind::Validation, "capacity change references unknown house '" + it.key() + "'");
    change.delta[*h] = asInt(it.value(), "capacity delta");
  }
  for (int h = 0; h < I.numHouses(); ++h)
    if (I.houseCapacity(h) + change.delta[h] < 0)
      fail(ErrorKind::Validation,
           "capacity change drops house '" + I.house(h).id + "' below zero");
  return change;
}

std::string serializeCapacityChange(const Instance& I, const CapacityChange& change) {
  if (static_cast<int>(change.delta.size()) != I.numHouses())
    fail(ErrorKind::Contract, "capacity change vector length mismatch");
  Json doc = Json::object();
  Json delta = Json::object();
  for (int h = 0; h < I.numHouses(); ++h)
    if (change.delta[h] != 0) delta[I.house(h).id] = change.delta[h];
  doc["delta"] = std::move(delta);
  return doc.dump();
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Parse, "cannot write file '" + path + "'");
  out << content;
}

}  // namespace mm
