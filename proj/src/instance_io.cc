#include "structensor/instance_io.h"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "structensor/errors.h"

namespace structensor {

namespace {

using Json = nlohmann::ordered_json;

std::int64_t NonNegative(const Json& value, const std::string& what) {
  if (!value.is_number_integer()) throw InvalidInstance(what + " must be an integer");
  const auto x = value.get<std::int64_t>();
  if (x < 0) throw InvalidInstance(what + " must be nonnegative");
  return x;
}

IntVector IntArray(const Json& doc, const std::string& key) {
  const Json& value = doc.at(key);
  if (!value.is_array()) throw InvalidInstance("\"" + key + "\" must be an array");
  IntVector out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(NonNegative(value[i], key + "[" + std::to_string(i + 1) + "]"));
  }
  return out;
}

}  // namespace

Instance InstanceFile::ToInstance() const {
  Instance instance;
  instance.h = h;
  if (pattern) {
    instance.r = r;
    instance.pattern = *pattern;
    instance.ceilings = ceilings;
  } else {
    instance.pattern = PatternFromServices(loads, special_times);
    bool rated = false;
    for (const ServiceSpec& load : loads) {
      instance.r.push_back(load.duration);
      instance.ceilings.push_back(load.ceiling);
      rated = rated || load.ceiling != 1;
    }
    if (!rated) instance.ceilings.clear();
  }
  instance.Validate();
  return instance;
}

PatternMatrix InstanceFile::OnesMatrix() const {
  const int rows = pattern ? static_cast<int>(r.size()) : static_cast<int>(loads.size());
  const int cols = static_cast<int>(h.size());
  PatternMatrix ones(rows, cols, false);
  for (const auto& [n, j] : this->ones) {
    if (n < 1 || n > rows || j < 1 || j > cols) {
      throw InvalidInstance("fixed one (" + std::to_string(n) + ", " +
                            std::to_string(j) + ") is out of range");
    }
    ones.Set(n - 1, j - 1, true);
  }
  return ones;
}

Instance InstanceFile::Reduced() const {
  return ReduceFixedOnes(ToInstance(), OnesMatrix());
}

InstanceFile ParseInstanceJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInstance(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInstance("instance must be a JSON object");
  if (!doc.contains("h")) throw InvalidInstance("missing \"h\"");
  const bool has_pattern = doc.contains("pattern");
  const bool has_loads = doc.contains("loads");
  if (has_pattern == has_loads) {
    throw InvalidInstance("exactly one of \"pattern\" and \"loads\" is required");
  }

  InstanceFile file;
  try {
    file.h = IntArray(doc, "h");
    if (has_pattern) {
      if (!doc.contains("r")) throw InvalidInstance("missing \"r\"");
      file.r = IntArray(doc, "r");
      const Json& rows = doc.at("pattern");
      if (!rows.is_array()) throw InvalidInstance("\"pattern\" must be an array");
      std::vector<std::vector<int>> cells;
      for (const Json& row : rows) {
        if (!row.is_array()) throw InvalidInstance("pattern rows must be arrays");
        std::vector<int>& out = cells.emplace_back();
        for (const Json& x : row) {
          if (!x.is_number_integer()) throw InvalidInstance("pattern entries must be 0 or 1");
          out.push_back(x.get<int>());
        }
      }
      file.pattern = PatternMatrix::FromRows(cells);
      if (file.pattern->rows() == 0) {
        file.pattern = PatternMatrix(static_cast<int>(file.r.size()),
                                     static_cast<int>(file.h.size()));
      }
      if (doc.contains("rbar")) file.ceilings = IntArray(doc, "rbar");
    } else {
      if (!doc.contains("special_times")) throw InvalidInstance("missing \"special_times\"");
      for (std::int64_t t : IntArray(doc, "special_times")) {
        file.special_times.push_back(static_cast<int>(t));
      }
      if (file.special_times.empty() ||
          file.special_times.back() != static_cast<int>(file.h.size())) {
        throw InvalidInstance("last special time must equal the length of \"h\"");
      }
      const Json& loads = doc.at("loads");
      if (!loads.is_array()) throw InvalidInstance("\"loads\" must be an array");
      for (std::size_t s = 0; s < loads.size(); ++s) {
        const Json& load = loads[s];
        const std::string name = "loads[" + std::to_string(s + 1) + "]";
        if (!load.is_object() || !load.contains("r") || !load.contains("a") ||
            !load.contains("d")) {
          throw InvalidInstance(name + " needs \"r\", \"a\" and \"d\"");
        }
        ServiceSpec spec;
        spec.duration = NonNegative(load.at("r"), name + ".r");
        spec.arrival = static_cast<int>(NonNegative(load.at("a"), name + ".a"));
        spec.deadline = static_cast<int>(NonNegative(load.at("d"), name + ".d"));
        if (load.contains("rbar")) spec.ceiling = NonNegative(load.at("rbar"), name + ".rbar");
        file.loads.push_back(spec);
      }
    }
    if (doc.contains("ones")) {
      const Json& ones = doc.at("ones");
      if (!ones.is_array()) throw InvalidInstance("\"ones\" must be an array");
      for (const Json& pair : ones) {
        if (!pair.is_array() || pair.size() != 2) {
          throw InvalidInstance("\"ones\" entries must be [row, col] pairs");
        }
        file.ones.emplace_back(static_cast<int>(NonNegative(pair[0], "ones row")),
                               static_cast<int>(NonNegative(pair[1], "ones col")));
      }
    }
  } catch (const Json::exception& e) {
    throw InvalidInstance(std::string("bad instance field: ") + e.what());
  }
  file.ToInstance();
  file.OnesMatrix();
  return file;
}

InstanceFile LoadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInstance("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstanceJson(buffer.str());
}

std::string SerializeInstanceJson(const InstanceFile& file) {
  Json doc;
  doc["h"] = file.h;
  if (file.pattern) {
    doc["r"] = file.r;
    doc["pattern"] = file.pattern->ToRows();
    if (!file.ceilings.empty()) doc["rbar"] = file.ceilings;
  } else {
    doc["special_times"] = file.special_times;
    Json loads = Json::array();
    for (const ServiceSpec& spec : file.loads) {
      Json load;
      load["r"] = spec.duration;
      load["a"] = spec.arrival;
      load["d"] = spec.deadline;
      if (spec.ceiling != 1) load["rbar"] = spec.ceiling;
      loads.push_back(load);
    }
    doc["loads"] = loads;
  }
  if (!file.ones.empty()) {
    Json ones = Json::array();
    for (const auto& [n, j] : file.ones) ones.push_back({n, j});
    doc["ones"] = ones;
  }
  return doc.dump() + "\n";
}

std::string MatrixToCsv(const IntMatrix& a) {
  std::string out;
  for (int n = 0; n < a.rows(); ++n) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(a(n, j));
    }
    out += '\n';
  }
  return out;
}

IntMatrix MatrixFromCsv(std::string_view text) {
  std::vector<IntVector> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    IntVector& row = rows.emplace_back();
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = std::min(line.find(',', start), line.size());
      const std::string_view field = line.substr(start, comma - start);
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw InvalidInstance("bad CSV field '" + std::string(field) + "'");
      }
      row.push_back(value);
      if (comma == line.size()) break;
      start = comma + 1;
    }
    if (row.size() != rows.front().size()) throw InvalidInstance("ragged CSV matrix");
  }
  if (rows.empty()) return IntMatrix();
  IntMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int n = 0; n < a.rows(); ++n) {
    for (int j = 0; j < a.cols(); ++j) a(n, j) = rows[n][j];
  }
  return a;
}

}  // namespace structensor
