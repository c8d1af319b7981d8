#include "qadd/qct.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qadd/kvfile.hpp"
#include "qadd/sim.hpp"

namespace qadd::qct {

namespace {

struct Cursor {
  const std::string& line;
  int line_no;
  std::size_t pos = 0;

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw parse_error(line_no, static_cast<int>(at) + 1, msg);
  }
  void skip_ws() {
    while (pos < line.size() &&
           std::isspace(static_cast<unsigned char>(line[pos]))) {
      ++pos;
    }
  }
  bool done() {
    skip_ws();
    return pos >= line.size();
  }
};

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

std::string read_word(Cursor& cur) {
  cur.skip_ws();
  const std::size_t start = cur.pos;
  while (cur.pos < cur.line.size() && is_word_char(cur.line[cur.pos])) {
    ++cur.pos;
  }
  if (cur.pos == start) {
    cur.fail(start, "expected a statement keyword or gate name");
  }
  return cur.line.substr(start, cur.pos - start);
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

// Parses the parenthesized angle list right after a gate name, if present.
std::vector<double> read_angles(Cursor& cur) {
  std::vector<double> angles;
  if (cur.pos >= cur.line.size() || cur.line[cur.pos] != '(') return angles;
  const std::size_t open = cur.pos;
  const std::size_t close = cur.line.find(')', open);
  if (close == std::string::npos) {
    cur.fail(open, "unclosed angle list");
  }
  std::size_t item_start = open + 1;
  while (true) {
    std::size_t item_end = cur.line.find(',', item_start);
    if (item_end == std::string::npos || item_end > close) item_end = close;
    const std::string raw = cur.line.substr(item_start, item_end - item_start);
    try {
      angles.push_back(parse_angle(raw));
    } catch (const error& e) {
      cur.fail(item_start, e.what());
    }
    if (item_end == close) break;
    item_start = item_end + 1;
  }
  cur.pos = close + 1;
  if (cur.pos < cur.line.size() && !std::isspace(static_cast<unsigned char>(cur.line[cur.pos]))) {
    cur.fail(cur.pos, "expected whitespace after the angle list");
  }
  return angles;
}

struct Operand {
  bool negated = false;
  long long index = 0;
  std::size_t column = 0;
};

Operand read_operand(Cursor& cur) {
  cur.skip_ws();
  Operand op;
  op.column = cur.pos;
  if (cur.pos < cur.line.size() && cur.line[cur.pos] == '!') {
    op.negated = true;
    ++cur.pos;
  }
  const std::size_t digits_start = cur.pos;
  while (cur.pos < cur.line.size() &&
         std::isdigit(static_cast<unsigned char>(cur.line[cur.pos]))) {
    ++cur.pos;
  }
  if (cur.pos == digits_start) {
    cur.fail(op.column, "expected a qubit index");
  }
  if (cur.pos < cur.line.size() &&
      !std::isspace(static_cast<unsigned char>(cur.line[cur.pos]))) {
    cur.fail(cur.pos, "malformed operand");
  }
  const std::string digits =
      cur.line.substr(digits_start, cur.pos - digits_start);
  if (digits.size() > 9) {
    cur.fail(op.column, "qubit index out of declared range");
  }
  op.index = std::atoll(digits.c_str());
  return op;
}

std::string format_angle(double value) {
  if (!std::isfinite(value)) {
    throw serialization_error("angle is not finite");
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

}  // namespace

double parse_angle(const std::string& token) {
  // Trim surrounding whitespace.
  std::size_t begin = 0;
  std::size_t end = token.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(token[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(token[end - 1]))) --end;
  const std::string t = token.substr(begin, end - begin);
  if (t.empty()) throw error("empty angle");

  std::string body = t;
  double sign = 1.0;
  if (body[0] == '-') {
    sign = -1.0;
    body.erase(0, 1);
  }
  if (body == "pi") return sign * std::numbers::pi;
  if (body.rfind("pi/", 0) == 0) {
    const std::string den = body.substr(3);
    if (den.empty() ||
        den.find_first_not_of("0123456789") != std::string::npos) {
      throw error("invalid angle \"" + t +
                  "\"; pi fractions need an integer denominator");
    }
    const long long d = std::atoll(den.c_str());
    if (d == 0) throw error("invalid angle \"" + t + "\"; division by zero");
    return sign * std::numbers::pi / static_cast<double>(d);
  }
  char* parse_end = nullptr;
  const double value = std::strtod(t.c_str(), &parse_end);
  if (parse_end != t.c_str() + t.size() || !std::isfinite(value)) {
    throw error("invalid angle \"" + t + "\"");
  }
  return value;
}

gates::Circuit parse(const std::string& text) {
  gates::Circuit circuit;
  bool have_qubits = false;
  bool have_indexing = false;
  bool one_based = true;
  bool any_gate = false;

  std::istringstream stream(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::size_t hash = raw.find('#');
    const std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);

    Cursor cur{line, line_no};
    if (cur.done()) continue;
    const std::size_t word_col = cur.pos;
    const std::string word = upper(read_word(cur));

    if (word == "QUBITS") {
      if (have_qubits) cur.fail(word_col, "duplicate QUBITS header");
      const Operand op = read_operand(cur);
      if (op.negated) cur.fail(op.column, "QUBITS takes a plain integer");
      if (!cur.done()) cur.fail(cur.pos, "trailing text after QUBITS");
      if (op.index < 1 || op.index > sim::kMaxQubits) {
        cur.fail(op.column, "qubit count must be in 1.." +
                                std::to_string(sim::kMaxQubits));
      }
      circuit.n_qubits = static_cast<int>(op.index);
      have_qubits = true;
      continue;
    }
    if (!have_qubits) {
      cur.fail(word_col, "first statement must be QUBITS <n>");
    }
    if (word == "INDEXING") {
      if (any_gate) {
        cur.fail(word_col, "INDEXING must come before gate statements");
      }
      if (have_indexing) cur.fail(word_col, "duplicate INDEXING header");
      const Operand op = read_operand(cur);
      if (op.negated || (op.index != 0 && op.index != 1)) {
        cur.fail(op.column, "INDEXING must be 0 or 1");
      }
      if (!cur.done()) cur.fail(cur.pos, "trailing text after INDEXING");
      one_based = op.index == 1;
      have_indexing = true;
      continue;
    }

    const auto id = gates::gate_id_from_name(word);
    if (!id) cur.fail(word_col, "unknown gate \"" + word + "\"");

    gates::GateApplication g;
    g.id = *id;
    g.params = read_angles(cur);
    if (static_cast<int>(g.params.size()) != gates::params_required(*id)) {
      cur.fail(word_col,
               "gate " + word + " takes " +
                   std::to_string(gates::params_required(*id)) +
                   " angle(s), got " + std::to_string(g.params.size()));
    }

    const int n_controls = gates::control_count(*id);
    const int n_targets = gates::target_count(*id);
    std::vector<Operand> operands;
    while (!cur.done()) operands.push_back(read_operand(cur));
    if (static_cast<int>(operands.size()) != n_controls + n_targets) {
      cur.fail(word_col, "gate " + word + " takes " +
                             std::to_string(n_controls + n_targets) +
                             " operand(s), got " +
                             std::to_string(operands.size()));
    }

    for (int i = 0; i < static_cast<int>(operands.size()); ++i) {
      const Operand& op = operands[static_cast<std::size_t>(i)];
      if (op.negated && i >= n_controls) {
        cur.fail(op.column, "negation is only valid on control positions");
      }
      const long long lo = one_based ? 1 : 0;
      const long long hi = one_based ? circuit.n_qubits : circuit.n_qubits - 1;
      if (op.index < lo || op.index > hi) {
        cur.fail(op.column, "qubit index " + std::to_string(op.index) +
                                " out of declared range " +
                                std::to_string(lo) + ".." +
                                std::to_string(hi));
      }
      const int qubit = static_cast<int>(one_based ? op.index : op.index + 1);
      if (i < n_controls) {
        g.controls.push_back({qubit, op.negated});
      } else {
        g.targets.push_back(qubit);
      }
    }

    try {
      gates::validate_gate(g, circuit.n_qubits);
    } catch (const error& e) {
      cur.fail(word_col, e.what());
    }
    circuit.gates.push_back(std::move(g));
    any_gate = true;
  }

  if (!have_qubits) {
    throw parse_error(1, 1, "missing QUBITS header");
  }
  return circuit;
}

gates::Circuit parse_file(const std::string& path) {
  return parse(kv::read_text_file(path));
}

std::string serialize(const gates::Circuit& c) {
  if (c.n_qubits < 1 || c.n_qubits > sim::kMaxQubits) {
    throw serialization_error("circuit qubit count " +
                              std::to_string(c.n_qubits) +
                              " outside the serializable range 1.." +
                              std::to_string(sim::kMaxQubits));
  }
  std::string out = "QUBITS " + std::to_string(c.n_qubits) + "\n";
  for (const auto& g : c.gates) {
    gates::validate_gate(g, c.n_qubits);
    out += gates::gate_name(g.id);
    if (!g.params.empty()) {
      out += '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i > 0) out += ", ";
        out += format_angle(g.params[i]);
      }
      out += ')';
    }
    for (const auto& ctrl : g.controls) {
      out += ' ';
      if (ctrl.negated) out += '!';
      out += std::to_string(ctrl.qubit);
    }
    for (const int t : g.targets) {
      out += ' ';
      out += std::to_string(t);
    }
    out += '\n';
  }
  return out;
}

void write_file(const std::string& path, const gates::Circuit& c,
                const std::string& leading_comment) {
  std::string payload;
  if (!leading_comment.empty()) {
    std::istringstream lines(leading_comment);
    std::string line;
    while (std::getline(lines, line)) {
      payload += "# " + line + "\n";
    }
  }
  payload += serialize(c);

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw error("cannot open " + path + " for writing");
  }
  out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
  if (!out) {
    throw error("failed writing " + path);
  }
}

bool structural_equal(const gates::Circuit& a, const gates::Circuit& b,
                      double param_tol) {
  if (a.n_qubits != b.n_qubits || a.gates.size() != b.gates.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.gates.size(); ++i) {
    const auto& ga = a.gates[i];
    const auto& gb = b.gates[i];
    if (ga.id != gb.id || ga.controls != gb.controls ||
        ga.targets != gb.targets || ga.params.size() != gb.params.size()) {
      return false;
    }
    for (std::size_t p = 0; p < ga.params.size(); ++p) {
      if (param_tol == 0.0) {
        if (ga.params[p] != gb.params[p]) return false;
      } else if (std::abs(ga.params[p] - gb.params[p]) > param_tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qadd::qct
