#include "djring/function_file.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "djring/errors.hpp"

namespace djring::oracle {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  std::size_t line;
};

std::vector<std::uint8_t> parse_bits(const Entry& e, const char* key) {
  std::vector<std::uint8_t> bits;
  bits.reserve(e.value.size());
  for (char c : e.value) {
    if (c != '0' && c != '1') {
      throw ParseError(e.line, std::string(key) + " must contain only 0 and 1");
    }
    bits.push_back(static_cast<std::uint8_t>(c == '1'));
  }
  return bits;
}

bool parse_bit(const Entry& e, const char* key) {
  if (e.value != "0" && e.value != "1") {
    throw ParseError(e.line, std::string(key) + " must be 0 or 1");
  }
  return e.value == "1";
}

}  // namespace

TruthTable FunctionSpec::to_table() const {
  if (kind == FunctionKind::TruthTable) return *table;
  return affine_table(affine);
}

tree::GateProgram FunctionSpec::compile() const {
  if (kind == FunctionKind::TruthTable) return compile_general(*table);
  return compile_affine(affine, n);
}

FunctionSpec parse_function(std::string_view text, int max_n) {
  std::map<std::string, Entry, std::less<>> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    auto raw = text.substr(pos, eol - pos);
    raw = raw.substr(0, raw.find('#'));
    const auto line = trim(raw);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key != "n" && key != "type" && key != "bits" && key != "a" && key != "c" &&
        key != "value") {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
    if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");
    if (!entries.emplace(key, Entry{value, line_no}).second) {
      throw ParseError(line_no, "duplicate key '" + key + "'");
    }
  }

  auto require = [&](const char* key) -> const Entry& {
    const auto it = entries.find(key);
    if (it == entries.end()) throw ParseError(0, std::string("missing key '") + key + "'");
    return it->second;
  };
  auto reject = [&](const char* key, const std::string& type) {
    const auto it = entries.find(key);
    if (it != entries.end()) {
      throw ParseError(it->second.line,
                       std::string("key '") + key + "' is not valid for type " + type);
    }
  };

  FunctionSpec spec;
  const Entry& n_entry = require("n");
  {
    const auto& v = n_entry.value;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), spec.n);
    if (ec != std::errc{} || ptr != v.data() + v.size() || spec.n < 1) {
      throw ParseError(n_entry.line, "n must be a positive integer");
    }
  }
  if (spec.n > max_n) {
    throw ResourceError("n = " + std::to_string(spec.n) + " exceeds the bound " +
                        std::to_string(max_n));
  }

  const Entry& type = require("type");
  if (type.value == "truthtable") {
    reject("a", type.value);
    reject("c", type.value);
    reject("value", type.value);
    const Entry& bits_entry = require("bits");
    auto bits = parse_bits(bits_entry, "bits");
    if (bits.size() != (std::size_t{1} << spec.n)) {
      throw ParseError(bits_entry.line, "bits must have 2^n = " +
                                            std::to_string(std::size_t{1} << spec.n) +
                                            " characters");
    }
    spec.kind = FunctionKind::TruthTable;
    spec.table = TruthTable(spec.n, std::move(bits));
  } else if (type.value == "affine") {
    reject("bits", type.value);
    reject("value", type.value);
    const Entry& a_entry = require("a");
    spec.affine.a = parse_bits(a_entry, "a");
    if (spec.affine.a.size() != static_cast<std::size_t>(spec.n)) {
      throw ParseError(a_entry.line, "a must have n characters");
    }
    spec.affine.c = parse_bit(require("c"), "c");
    spec.kind = FunctionKind::Affine;
  } else if (type.value == "constant") {
    reject("bits", type.value);
    reject("a", type.value);
    reject("c", type.value);
    spec.affine.a.assign(spec.n, 0);
    spec.affine.c = parse_bit(require("value"), "value");
    spec.kind = FunctionKind::Constant;
  } else {
    throw ParseError(type.line, "type must be truthtable, affine or constant");
  }
  return spec;
}

FunctionSpec load_function_file(const std::string& path, int max_n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open function file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_function(buffer.str(), max_n);
}

std::string function_to_text(const FunctionSpec& spec) {
  std::ostringstream out;
  out << "n = " << spec.n << '\n';
  switch (spec.kind) {
    case FunctionKind::TruthTable:
      out << "type = truthtable\nbits = " << spec.table->to_string() << '\n';
      break;
    case FunctionKind::Affine:
      out << "type = affine\na = ";
      for (auto b : spec.affine.a) out << (b ? '1' : '0');
      out << "\nc = " << (spec.affine.c ? 1 : 0) << '\n';
      break;
    case FunctionKind::Constant:
      out << "type = constant\nvalue = " << (spec.affine.c ? 1 : 0) << '\n';
      break;
  }
  return out.str();
}

}  // namespace djring::oracle
