#include "djring/program_text.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "djring/errors.hpp"

namespace djring::tree {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) parts.push_back(s.substr(start, i - start));
  }
  return parts;
}

int parse_int(std::string_view s, std::size_t line, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

std::string_view keyed(std::string_view token, std::string_view key, std::size_t line) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    throw ParseError(line, "expected '" + std::string(key) + "=...' but found '" +
                               std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

int parse_level(std::string_view token, int n, std::size_t line) {
  const int level = parse_int(keyed(token, "level", line), line, "level");
  if (level < 1 || level > n) {
    throw ParseError(line, "level " + std::to_string(level) + " outside [1, " +
                               std::to_string(n) + "]");
  }
  return level;
}

}  // namespace

GateProgram parse_program(std::string_view text) {
  GateProgram program;
  bool have_n = false;
  bool have_global = false;
  int current_round = 0;
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

    const auto tokens = split_ws(line);
    const auto keyword = tokens.front();
    if (keyword == "N") {
      if (have_n) throw ParseError(line_no, "duplicate N line");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'N <n>'");
      program.n = parse_int(tokens[1], line_no, "register size");
      if (program.n < 1) throw ParseError(line_no, "register size must be >= 1");
      if (program.n > kDefaultMaxLevel) {
        throw ResourceError("register size " + std::to_string(program.n) +
                            " exceeds the maximum tree level " +
                            std::to_string(kDefaultMaxLevel));
      }
      have_n = true;
      continue;
    }
    if (keyword == "GLOBAL") {
      if (have_global) throw ParseError(line_no, "duplicate GLOBAL line");
      if (tokens.size() != 2 || (tokens[1] != "0" && tokens[1] != "1")) {
        throw ParseError(line_no, "expected 'GLOBAL <0|1>'");
      }
      program.global_phase = tokens[1] == "1";
      have_global = true;
      continue;
    }
    if (!have_n) throw ParseError(line_no, "N line must precede ops");

    if (keyword == "PHASE") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'PHASE level=<k> mask=<bits>'");
      PhaseMaskOp op;
      op.level = parse_level(tokens[1], program.n, line_no);
      const auto bits = keyed(tokens[2], "mask", line_no);
      if (bits.size() != (std::size_t{1} << (op.level - 1))) {
        throw ParseError(line_no, "mask length must be 2^(level-1)");
      }
      for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError(line_no, "mask must contain only 0 and 1");
        op.mask.push_back(static_cast<std::uint8_t>(c == '1'));
      }
      if (op.level < current_round) {
        throw ParseError(line_no, "PHASE level " + std::to_string(op.level) +
                                      " follows an op at round " + std::to_string(current_round));
      }
      current_round = op.level;
      program.add(current_round, std::move(op));
    } else if (keyword == "SWAP") {
      if (tokens.size() != 3 && tokens.size() != 2) {
        throw ParseError(line_no, "expected 'SWAP level=<k> pattern=<01*>'");
      }
      SwapOp op;
      op.level = parse_level(tokens[1], program.n, line_no);
      std::string_view pattern;
      if (tokens.size() == 3) pattern = keyed(tokens[2], "pattern", line_no);
      if (pattern.size() != static_cast<std::size_t>(op.level - 1)) {
        throw ParseError(line_no, "pattern length must be level-1");
      }
      for (char c : pattern) {
        if (c != '0' && c != '1' && c != '*') {
          throw ParseError(line_no, "pattern must contain only 0, 1 and *");
        }
        op.pattern.push_back(static_cast<PatternBit>(c));
      }
      current_round = std::max(current_round, op.level);
      program.add(current_round, std::move(op));
    } else {
      throw ParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
    }
  }
  if (!have_n) throw ParseError(0, "missing N line");
  program.validate();
  return program;
}

std::string program_to_text(const GateProgram& program) {
  program.validate();
  std::ostringstream out;
  out << "N " << program.n << '\n';
  int current_round = 0;
  for (const auto& step : program.steps) {
    for (const auto& op : step.ops) {
      if (const auto* mask = std::get_if<PhaseMaskOp>(&op)) {
        current_round = mask->level;
        out << "PHASE level=" << mask->level << " mask=";
        for (auto bit : mask->mask) out << (bit ? '1' : '0');
      } else {
        const auto& swap = std::get<SwapOp>(op);
        current_round = std::max(current_round, swap.level);
        out << "SWAP level=" << swap.level << " pattern=";
        for (auto bit : swap.pattern) out << static_cast<char>(bit);
      }
      if (current_round != step.round) {
        throw ContractViolation("op placed at round " + std::to_string(step.round) +
                                " cannot be expressed in the program text format");
      }
      out << '\n';
    }
  }
  out << "GLOBAL " << (program.global_phase ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace djring::tree
