#include "ringlab/ring_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ringlab {

using ojson = nlohmann::ordered_json;

std::string ring_to_json(const FiniteRing& ring) {
  const std::size_t n = ring.order();
  ojson j;
  j["name"] = ring.name();
  j["order"] = n;
  j["zero"] = ring.zero();
  j["one"] = ring.one();
  ojson add = ojson::array();
  ojson mul = ojson::array();
  for (Elem a = 0; a < n; ++a) {
    const auto arow = ring.add_row(a);
    const auto mrow = ring.mul_row(a);
    add.push_back(std::vector<Elem>(arow.begin(), arow.end()));
    mul.push_back(std::vector<Elem>(mrow.begin(), mrow.end()));
  }
  j["add"] = std::move(add);
  j["mul"] = std::move(mul);
  if (ring.has_custom_labels()) j["labels"] = ring.labels();
  return j.dump() + "\n";
}

FiniteRing ring_from_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("ring JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("ring JSON: top level must be an object");
  for (const char* key : {"order", "zero", "one", "add", "mul"}) {
    if (!j.contains(key)) throw FormatError(std::string("ring JSON: missing key '") + key + "'");
  }
  RingTables raw;
  try {
    raw.name = j.value("name", std::string("ring"));
    raw.order = j.at("order").get<std::size_t>();
    raw.zero = j.at("zero").get<Elem>();
    raw.one = j.at("one").get<Elem>();
    raw.add = j.at("add").get<std::vector<std::vector<Elem>>>();
    raw.mul = j.at("mul").get<std::vector<std::vector<Elem>>>();
    if (j.contains("labels")) raw.labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("ring JSON: ") + e.what());
  }
  return validate_ring(std::move(raw));
}

FiniteRing load_ring(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open ring file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ring_from_json(buf.str());
}


void save_ring(const FiniteRing& ring, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write ring file " + path.string());
  out << ring_to_json(ring);
}

namespace {

std::vector<Elem> flatten(const std::vector<std::vector<Elem>>& rows, std::size_t width,
                          const char* what) {
  std::vector<Elem> out;
  for (const auto& row : rows) {
    if (row.size() != width) {
      throw FormatError(std::string("bimodule JSON: ragged '") + what + "' table");
    }
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::string read_file(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(std::string("cannot open ") + what + " file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Bimodule bimodule_from_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("bimodule JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("bimodule JSON: top level must be an object");
  for (const char* key : {"order", "zero", "add", "left", "right"}) {
    if (!j.contains(key)) {
      throw FormatError(std::string("bimodule JSON: missing key '") + key + "'");
    }
  }
  Bimodule m;
  try {
    m.name = j.value("name", std::string("module"));
    m.order = j.at("order").get<std::size_t>();
    m.zero = j.at("zero").get<Elem>();
    const auto add = j.at("add").get<std::vector<std::vector<Elem>>>();
    const auto left = j.at("left").get<std::vector<std::vector<Elem>>>();
    const auto right = j.at("right").get<std::vector<std::vector<Elem>>>();
    if (add.size() != m.order || right.size() != m.order) {
      throw FormatError("bimodule JSON: table row count differs from order");
    }
    m.add = flatten(add, m.order, "add");
    m.left = flatten(left, m.order, "left");
    m.right = flatten(right, right.empty() ? 0 : right.front().size(), "right");
    if (j.contains("labels")) m.labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bimodule JSON: ") + e.what());
  }
  return m;
}

Bimodule load_bimodule(const std::filesystem::path& path) {
  return bimodule_from_json(read_file(path, "bimodule"));
}

std::string bimodule_to_json(const Bimodule& m, std::size_t left_order, std::size_t right_order) {
  const auto rows = [](const std::vector<Elem>& flat, std::size_t count, std::size_t width) {
    ojson out = ojson::array();
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(std::vector<Elem>(flat.begin() + static_cast<std::ptrdiff_t>(i * width),
                                      flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * width)));
    }
    return out;
  };
  ojson j;
  j["name"] = m.name;
  j["order"] = m.order;
  j["zero"] = m.zero;
  j["add"] = rows(m.add, m.order, m.order);
  j["left"] = rows(m.left, left_order, m.order);
  j["right"] = rows(m.right, m.order, right_order);
  if (!m.labels.empty()) j["labels"] = m.labels;
  return j.dump() + "\n";
}

}  // namespace ringlab
