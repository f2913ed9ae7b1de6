// Copyright 2026 The wfcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wfcheck/scenario/language.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "wfcheck/scenario/resolve.h"

namespace wfcheck::scenario {
namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& ds) {
  std::string out;
  for (const auto& d : ds) {
    if (!out.empty()) out += '\n';
    out += d.str();
  }
  return out;
}

// ---------------------------------------------------------------- lexing

struct Token {
  std::string text;
  std::size_t column = 0;
};

bool is_punct(char c) {
  return c == ',' || c == '[' || c == ']' || c == '(' || c == ')' || c == '=' || c == '|' ||
         c == '*';
}

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_punct(c)) {
      out.push_back({std::string(1, c), i + 1});
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           !is_punct(line[i]) && line[i] != '#') {
      ++i;
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

bool parse_real(const std::string& s, double& out) {
  if (s.empty()) return false;
  const char* begin = s.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  return end == begin + s.size() && std::isfinite(out);
}

// Accepts "a", "bi", "i", "-i", "a+bi", "a-i", with exponents.
bool parse_complex(const std::string& s, Complex& out) {
  if (s.empty()) return false;
  double re = 0.0;
  if (parse_real(s, re)) {
    out = {re, 0.0};
    return true;
  }
  if (s.back() != 'i') return false;
  const std::string body = s.substr(0, s.size() - 1);
  auto imag_of = [](const std::string& t, double& v) {
    if (t.empty() || t == "+") {
      v = 1.0;
      return true;
    }
    if (t == "-") {
      v = -1.0;
      return true;
    }
    return parse_real(t, v);
  };
  double im = 0.0;
  if (imag_of(body, im)) {
    out = {0.0, im};
    return true;
  }
  // Split at the last sign that is not the leading sign or part of an exponent.
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      if (parse_real(body.substr(0, k), re) && imag_of(body.substr(k), im)) {
        out = {re, im};
        return true;
      }
      return false;
    }
  }
  return false;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex c) {
  std::string out = format_real(c.real());
  if (c.imag() != 0.0 || std::signbit(c.imag())) {
    out += std::signbit(c.imag()) ? '-' : '+';
    out += format_real(std::abs(c.imag()));
    out += 'i';
  }
  return out;
}

// --------------------------------------------------------------- parsing

struct SyntaxFailure {
  std::size_t column;
  std::string message;
  std::string reason = "syntax error";
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, std::size_t line_no, std::size_t line_len)
      : tokens_(std::move(tokens)), line_(line_no), eol_column_(line_len + 1) {}

  SourcePos pos_of_start() const { return {line_, tokens_.front().column}; }

  bool done() const { return next_ >= tokens_.size(); }

  const std::string& peek_text() const {
    static const std::string empty;
    return done() ? empty : tokens_[next_].text;
  }

  bool accept(std::string_view word) {
    if (!done() && tokens_[next_].text == word) {
      ++next_;
      return true;
    }
    return false;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }

  std::string identifier(std::string_view what) {
    if (done() || !is_identifier(tokens_[next_].text)) fail("expected " + std::string(what));
    return tokens_[next_++].text;
  }

  std::vector<std::string> identifier_list(std::string_view what) {
    std::vector<std::string> out{identifier(what)};
    while (accept(",")) out.push_back(identifier(what));
    return out;
  }

  std::size_t positive_integer(std::string_view what) {
    if (!done()) {
      const std::string& t = tokens_[next_].text;
      bool digits = !t.empty();
      for (char c : t) digits = digits && std::isdigit(static_cast<unsigned char>(c));
      if (digits && t.size() < 10) {
        ++next_;
        return static_cast<std::size_t>(std::stoul(t));
      }
    }
    fail("expected " + std::string(what));
  }

  double real(std::string_view what) {
    double v = 0.0;
    if (done() || !parse_real(tokens_[next_].text, v)) fail("expected " + std::string(what));
    ++next_;
    return v;
  }

  Complex complex() {
    Complex v;
    if (done() || !parse_complex(tokens_[next_].text, v)) fail("expected a complex number");
    ++next_;
    return v;
  }

  std::vector<Complex> complex_vector() {
    expect("[");
    std::vector<Complex> out{complex()};
    while (accept(",")) out.push_back(complex());
    expect("]");
    return out;
  }

  Label label() {
    if (done()) fail("expected a label");
    const std::string& t = tokens_[next_].text;
    double v = 0.0;
    if (parse_real(t, v)) {
      ++next_;
      return Label(v);
    }
    if (is_identifier(t)) {
      ++next_;
      return Label::symbol(t);
    }
    fail("expected a label");
  }

  void end() {
    if (!done()) fail("unexpected '" + tokens_[next_].text + "'");
  }

  [[noreturn]] void fail(std::string message, std::string reason = "syntax error") const {
    const std::size_t col = done() ? eol_column_ : tokens_[next_].column;
    throw SyntaxFailure{col, std::move(message), std::move(reason)};
  }

  std::size_t column_of_next() const { return done() ? eol_column_ : tokens_[next_].column; }

 private:
  std::vector<Token> tokens_;
  std::size_t next_ = 0;
  std::size_t line_;
  std::size_t eol_column_;
};

void parse_record(LineParser& p, AgentDecl& agent) {
  RecordDecl r;
  r.id = p.identifier("record id");
  if (p.accept("dim")) r.dim = p.positive_integer("a dimension");
  if (p.accept("init")) r.init = p.label();
  if (p.accept("pointer")) r.pointer = p.identifier("basis name");
  agent.records.push_back(std::move(r));
}

BasisDecl parse_basis(LineParser& p, SourcePos pos) {
  BasisDecl b;
  b.pos = pos;
  b.name = p.identifier("basis name");
  if (p.accept("=")) {
    const std::size_t col = p.column_of_next();
    const std::string preset = p.identifier("basis1, basis2 or basis3");
    if (preset == "basis1") {
      b.preset = BasisPreset::kBasis1;
    } else if (preset == "basis2") {
      b.preset = BasisPreset::kBasis2;
    } else if (preset == "basis3") {
      b.preset = BasisPreset::kBasis3;
    } else {
      throw SyntaxFailure{col, "unknown basis preset '" + preset + "'"};
    }
    b.dims = preset_dims(b.preset);
    if (p.accept("dims")) {
      b.dims = {p.positive_integer("a dimension")};
      while (p.accept(",")) b.dims.push_back(p.positive_integer("a dimension"));
    }
  } else {
    b.preset = BasisPreset::kRaw;
    p.expect("dims");
    b.dims = {p.positive_integer("a dimension")};
    while (p.accept(",")) b.dims.push_back(p.positive_integer("a dimension"));
    p.expect("vectors");
    b.vectors.push_back(p.complex_vector());
    while (p.peek_text() == "[") b.vectors.push_back(p.complex_vector());
  }
  if (p.accept("labels")) {
    b.labels.push_back(p.label());
    while (!p.done()) b.labels.push_back(p.label());
  }
  return b;
}

Prepare parse_prepare(LineParser& p) {
  Prepare e;
  const std::size_t col = p.column_of_next();
  if (p.accept("ghz")) {
    e.state.kind = StateKind::kGhz;
  } else if (p.accept("schmidt")) {
    e.state.kind = StateKind::kSchmidt;
    p.expect("(");
    e.state.coefficients.push_back(p.real("a real coefficient"));
    while (p.accept(",")) e.state.coefficients.push_back(p.real("a real coefficient"));
    p.expect(")");
  } else if (p.accept("state")) {
    e.state.kind = StateKind::kAmplitudes;
    e.state.amplitudes = p.complex_vector();
  } else {
    p.fail("expected ghz, schmidt(...) or state [...]");
  }
  const double n2 = state_norm_squared(e.state);
  if (std::abs(n2 - 1.0) > kLiteralNormTolerance) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "squared norm is %.12g, expected 1", n2);
    throw SyntaxFailure{col, buf, "unnormalized state"};
  }
  p.expect("on");
  e.targets = p.identifier_list("subsystem id");
  return e;
}

Interact parse_interact(LineParser& p) {
  Interact e;
  e.agent = p.identifier("agent name");
  p.expect("on");
  e.targets = p.identifier_list("subsystem id");
  p.expect("basis");
  e.basis = p.identifier("basis name");
  p.expect("record");
  e.record = p.identifier("record id");
  if (p.accept("as")) e.result = p.identifier("result name");
  return e;
}

Measure parse_measure(LineParser& p) {
  Measure e;
  e.observer = p.identifier("observer name");
  p.expect("on");
  e.targets = p.identifier_list("subsystem id");
  p.expect("basis");
  e.bases.push_back(p.identifier("basis name"));
  while (p.accept("*")) e.bases.push_back(p.identifier("basis name"));
  if (p.accept("encode")) {
    p.expect("bits");
    e.encode_bits = true;
  }
  p.expect("as");
  e.result = p.identifier("result name");
  e.concurrent = p.accept("concurrent");
  return e;
}

ReadRecord parse_read(LineParser& p) {
  ReadRecord e;
  e.observer = p.identifier("observer name");
  p.expect("record");
  e.record = p.identifier("record id");
  if (p.accept("basis")) e.basis = p.identifier("basis name");
  p.expect("as");
  e.result = p.identifier("result name");
  e.concurrent = p.accept("concurrent");
  return e;
}

DeclarePartition parse_partition(LineParser& p) {
  DeclarePartition e;
  e.name = p.identifier("partition name");
  p.expect("=");
  e.groups.push_back(p.identifier_list("subsystem id"));
  while (p.accept("|")) e.groups.push_back(p.identifier_list("subsystem id"));
  return e;
}

// ------------------------------------------------------------ validation

class Validator {
 public:
  explicit Validator(const Scenario& s) : s_(s) {}

  std::vector<Diagnostic> run() {
    check_declarations();
    if (!layout_ok_) return std::move(out_);
    for (std::size_t k = 0; k < s_.timeline.size(); ++k) check_event(k);
    return std::move(out_);
  }

 private:
  void report(std::optional<std::size_t> event, SourcePos pos, std::string reason,
              std::string message) {
    out_.push_back({event, pos, std::move(reason), std::move(message)});
  }
  void report_event(std::size_t k, std::string reason, std::string message) {
    report(k, s_.timeline[k].pos, std::move(reason), std::move(message));
  }

  void check_declarations() {
    if (s_.name.empty()) report(std::nullopt, s_.pos, "no scenario declared", "missing 'scenario NAME'");
    std::set<std::string> subsystems, actors, bases;
    for (const auto& sys : s_.systems) {
      if (!subsystems.insert(sys.id).second) {
        report(std::nullopt, sys.pos, "duplicate identifier", "subsystem '" + sys.id + "' declared twice");
        layout_ok_ = false;
      }
      if (sys.dim < 2) {
        report(std::nullopt, sys.pos, "dimension mismatch", "subsystem '" + sys.id + "' needs dim >= 2");
        layout_ok_ = false;
      }
    }
    for (const auto& a : s_.agents) {
      if (!actors.insert(a.name).second) {
        report(std::nullopt, a.pos, "duplicate identifier", "name '" + a.name + "' declared twice");
      }
      for (const auto& r : a.records) {
        if (!subsystems.insert(r.id).second) {
          report(std::nullopt, a.pos, "duplicate identifier", "subsystem '" + r.id + "' declared twice");
          layout_ok_ = false;
        }
        if (r.dim < 2) {
          report(std::nullopt, a.pos, "dimension mismatch", "record '" + r.id + "' needs dim >= 2");
          layout_ok_ = false;
        }
      }
    }
    for (const auto& o : s_.observers) {
      if (!actors.insert(o.name).second) {
        report(std::nullopt, o.pos, "duplicate identifier", "name '" + o.name + "' declared twice");
      }
    }
    for (const auto& b : s_.bases) {
      if (!bases.insert(b.name).second) {
        report(std::nullopt, b.pos, "duplicate identifier", "basis '" + b.name + "' declared twice");
        continue;
      }
      try {
        unbound_basis(b);
      } catch (const Error& e) {
        report(std::nullopt, b.pos, "invalid basis", "basis '" + b.name + "': " + e.what());
      }
    }
    if (!layout_ok_) return;
    for (const auto& a : s_.agents) {
      for (const auto& r : a.records) {
        if (!r.pointer.empty() && !s_.find_basis(r.pointer)) {
          report(std::nullopt, a.pos, "unknown identifier", "unknown basis '" + r.pointer + "'");
          continue;
        }
        try {
          const BasisSpec pointer = record_pointer(s_, r.id);
          try {
            pointer.index_of(r.init);
          } catch (const Error&) {
            report(std::nullopt, a.pos, "invalid label",
                   "init label " + r.init.str() + " of record '" + r.id + "' is not a pointer label");
          }
        } catch (const Error& e) {
          report(std::nullopt, a.pos, "basis/target mismatch",
                 "pointer basis of record '" + r.id + "': " + e.what());
        }
      }
    }
  }

  bool is_system(const std::string& id) const { return s_.find_system(id) != nullptr; }
  bool is_subsystem(const std::string& id) const {
    return is_system(id) || s_.find_record(id).second != nullptr;
  }

  // Reports unknown, duplicate and unprepared targets; true when all targets
  // are known and distinct.
  bool check_targets(std::size_t k, const std::vector<std::string>& targets, bool need_prepared) {
    bool ok = true;
    std::set<std::string> seen;
    for (const auto& t : targets) {
      if (!is_subsystem(t)) {
        report_event(k, "unknown identifier", "unknown subsystem '" + t + "'");
        ok = false;
        continue;
      }
      if (!seen.insert(t).second) {
        report_event(k, "basis/target mismatch", "subsystem '" + t + "' listed twice");
        ok = false;
      }
      if (need_prepared && is_system(t) && !prepared_.count(t)) {
        report_event(k, "unprepared target", "system '" + t + "' is used before any prepare");
      }
    }
    return ok;
  }

  void check_result(std::size_t k, const std::string& result) {
    if (result.empty()) return;
    if (!results_.insert(result).second) {
      report_event(k, "duplicate result", "result '" + result + "' bound twice");
    }
  }

  void check_basis_on(std::size_t k, const std::string& basis, const std::vector<std::string>& targets) {
    if (!s_.find_basis(basis)) {
      report_event(k, "unknown identifier", "unknown basis '" + basis + "'");
      return;
    }
    try {
      resolve_basis(s_, basis, targets);
    } catch (const Error& e) {
      report_event(k, "basis/target mismatch", e.what());
    }
  }

  void check_event(std::size_t k) {
    const Event& ev = s_.timeline[k];
    const bool concurrent = std::visit(
        [](const auto& b) {
          using T = std::decay_t<decltype(b)>;
          if constexpr (std::is_same_v<T, Measure> || std::is_same_v<T, ReadRecord>) {
            return b.concurrent;
          } else {
            return false;
          }
        },
        ev.body);
    if (concurrent) {
      const bool prev_ok = k > 0 && (std::holds_alternative<Measure>(s_.timeline[k - 1].body) ||
                                     std::holds_alternative<ReadRecord>(s_.timeline[k - 1].body));
      if (!prev_ok) {
        report_event(k, "concurrent without predecessor",
                     "a concurrent event must follow a measure or read");
      }
    }
    std::visit([&](const auto& b) { check(k, b); }, ev.body);
  }

  void check(std::size_t k, const Prepare& e) {
    bool ok = true;
    for (const auto& t : e.targets) {
      if (!is_system(t)) {
        report_event(k, is_subsystem(t) ? "basis/target mismatch" : "unknown identifier",
                     is_subsystem(t) ? "records cannot be prepared ('" + t + "')"
                                     : "unknown subsystem '" + t + "'");
        ok = false;
      } else if (touched_.count(t)) {
        report_event(k, "timeline-order violation", "system '" + t + "' is prepared after it was used");
      }
    }
    if (!check_targets(k, e.targets, false)) ok = false;
    const double n2 = state_norm_squared(e.state);
    if (std::abs(n2 - 1.0) > kLiteralNormTolerance) {
      report_event(k, "unnormalized state", "squared norm is " + format_real(n2));
    }
    if (ok) {
      std::vector<std::size_t> dims;
      for (const auto& t : e.targets) dims.push_back(s_.find_system(t)->dim);
      try {
        resolve_state(e.state, dims);
      } catch (const Error& err) {
        report_event(k, "dimension mismatch", err.what());
      }
    }
    for (const auto& t : e.targets) {
      prepared_.insert(t);
      touched_.insert(t);
    }
  }

  void check(std::size_t k, const Interact& e) {
    if (!s_.find_agent(e.agent)) report_event(k, "unknown identifier", "unknown agent '" + e.agent + "'");
    const bool targets_ok = check_targets(k, e.targets, true);
    const auto [owner, rec] = s_.find_record(e.record);
    if (!rec) {
      report_event(k, "unknown identifier", "unknown record '" + e.record + "'");
    } else {
      if (owner->name != e.agent) {
        report_event(k, "unknown identifier",
                     "record '" + e.record + "' does not belong to agent '" + e.agent + "'");
      }
      for (const auto& t : e.targets) {
        if (t == e.record) report_event(k, "basis/target mismatch", "record '" + t + "' is also a target");
      }
      if (written_.count(e.record)) {
        report_event(k, "record already written", "record '" + e.record + "' was written earlier");
      }
      written_.insert(e.record);
    }
    if (targets_ok) {
      check_basis_on(k, e.basis, e.targets);
      if (rec && s_.find_basis(e.basis)) {
        try {
          const std::size_t n = resolve_basis(s_, e.basis, e.targets).size();
          if (rec->dim < n) {
            report_event(k, "record too small",
                         "record '" + e.record + "' has dim " + std::to_string(rec->dim) + ", basis has " +
                             std::to_string(n) + " outcomes");
          }
        } catch (const Error&) {
        }
      }
    }
    for (const auto& t : e.targets) touched_.insert(t);
    check_result(k, e.result);
  }

  void check(std::size_t k, const Measure& e) {
    if (!s_.find_observer(e.observer)) {
      report_event(k, "unknown identifier", "unknown observer '" + e.observer + "'");
    }
    if (check_targets(k, e.targets, true)) {
      bool bases_ok = true;
      for (const auto& b : e.bases) {
        if (!s_.find_basis(b)) {
          report_event(k, "unknown identifier", "unknown basis '" + b + "'");
          bases_ok = false;
        }
      }
      if (bases_ok) {
        try {
          const ObservableSpec o = resolve_observable(s_, e);
          (void)o;
        } catch (const Error& err) {
          report_event(k, "basis/target mismatch", err.what());
        }
      }
    }
    for (const auto& t : e.targets) touched_.insert(t);
    check_result(k, e.result);
  }

  void check(std::size_t k, const ReadRecord& e) {
    if (!s_.find_observer(e.observer)) {
      report_event(k, "unknown identifier", "unknown observer '" + e.observer + "'");
    }
    if (!s_.find_record(e.record).second) {
      report_event(k, "unknown identifier", "unknown record '" + e.record + "'");
    } else {
      if (!written_.count(e.record)) {
        report_event(k, "record never written", "record '" + e.record + "' is read before any interact writes it");
      }
      if (!e.basis.empty()) check_basis_on(k, e.basis, {e.record});
    }
    check_result(k, e.result);
  }

  void check(std::size_t k, const DeclarePartition& e) {
    std::set<std::string> seen;
    for (const auto& g : e.groups) {
      for (const auto& t : g) {
        if (!is_subsystem(t)) {
          report_event(k, "unknown identifier", "unknown subsystem '" + t + "'");
        } else if (!seen.insert(t).second) {
          report_event(k, "duplicate identifier", "subsystem '" + t + "' appears in two groups");
        }
      }
    }
  }

  const Scenario& s_;
  std::vector<Diagnostic> out_;
  bool layout_ok_ = true;
  std::set<std::string> prepared_, touched_, written_, results_;
};

// --------------------------------------------------------------- printing

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += sep;
    out += xs[k];
  }
  return out;
}

std::string print_vector(const std::vector<Complex>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += format_complex(v[k]);
  }
  return out + "]";
}

std::string print_dims(const std::vector<std::size_t>& dims) {
  std::string out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(dims[k]);
  }
  return out;
}

struct EventPrinter {
  std::ostringstream& os;

  void operator()(const Prepare& e) const {
    os << "prepare ";
    switch (e.state.kind) {
      case StateKind::kGhz:
        os << "ghz";
        break;
      case StateKind::kSchmidt: {
        os << "schmidt(";
        for (std::size_t k = 0; k < e.state.coefficients.size(); ++k) {
          if (k) os << ", ";
          os << format_real(e.state.coefficients[k]);
        }
        os << ")";
        break;
      }
      case StateKind::kAmplitudes:
        os << "state " << print_vector(e.state.amplitudes);
        break;
    }
    os << " on " << join(e.targets, ",");
  }
  void operator()(const Interact& e) const {
    os << "interact " << e.agent << " on " << join(e.targets, ",") << " basis " << e.basis << " record "
       << e.record;
    if (!e.result.empty()) os << " as " << e.result;
  }
  void operator()(const Measure& e) const {
    os << "measure " << e.observer << " on " << join(e.targets, ",") << " basis " << join(e.bases, "*");
    if (e.encode_bits) os << " encode bits";
    os << " as " << e.result;
    if (e.concurrent) os << " concurrent";
  }
  void operator()(const ReadRecord& e) const {
    os << "read " << e.observer << " record " << e.record;
    if (!e.basis.empty()) os << " basis " << e.basis;
    os << " as " << e.result;
    if (e.concurrent) os << " concurrent";
  }
  void operator()(const DeclarePartition& e) const {
    os << "partition " << e.name << " =";
    for (std::size_t k = 0; k < e.groups.size(); ++k) {
      os << (k ? " | " : " ") << join(e.groups[k], ",");
    }
  }
};

}  // namespace

std::string Diagnostic::str() const {
  std::string out;
  if (pos.line > 0) out = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
  out += reason;
  if (!message.empty()) out += ": " + message;
  return out;
}

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Scenario parse_syntax(std::string_view source) {
  Scenario s;
  std::vector<Diagnostic> diags;
  bool have_name = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= source.size()) {
    std::size_t stop = source.find('\n', start);
    if (stop == std::string_view::npos) stop = source.size();
    std::string_view line = source.substr(start, stop - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    start = stop + 1;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string keyword = tokens.front().text;
    LineParser p(std::move(tokens), line_no, line.size());
    const SourcePos pos = p.pos_of_start();
    p.accept(keyword);
    try {
      if (keyword == "scenario") {
        if (have_name) p.fail("scenario declared twice", "duplicate identifier");
        s.name = p.identifier("scenario name");
        s.pos = pos;
        have_name = true;
      } else if (keyword == "system") {
        SystemDecl d;
        d.pos = pos;
        d.id = p.identifier("system id");
        if (p.accept("dim")) d.dim = p.positive_integer("a dimension");
        s.systems.push_back(std::move(d));
      } else if (keyword == "agent") {
        AgentDecl a;
        a.pos = pos;
        a.name = p.identifier("agent name");
        while (p.accept("record")) parse_record(p, a);
        s.agents.push_back(std::move(a));
      } else if (keyword == "observer") {
        s.observers.push_back({p.identifier("observer name"), pos});
      } else if (keyword == "basis") {
        s.bases.push_back(parse_basis(p, pos));
      } else if (keyword == "prepare") {
        s.timeline.push_back({parse_prepare(p), pos});
      } else if (keyword == "interact") {
        s.timeline.push_back({parse_interact(p), pos});
      } else if (keyword == "measure") {
        s.timeline.push_back({parse_measure(p), pos});
      } else if (keyword == "read") {
        s.timeline.push_back({parse_read(p), pos});
      } else if (keyword == "partition") {
        s.timeline.push_back({parse_partition(p), pos});
      } else {
        throw SyntaxFailure{pos.column, "unknown statement '" + keyword + "'"};
      }
      p.end();
    } catch (const SyntaxFailure& f) {
      diags.push_back({std::nullopt, {line_no, f.column}, f.reason, f.message});
    }
    if (stop == source.size()) break;
  }
  if (!have_name && diags.empty()) {
    diags.push_back({std::nullopt, {}, "no scenario declared", "missing 'scenario NAME'"});
  }
  if (!diags.empty()) throw ParseError(std::move(diags));
  return s;
}

Scenario parse(std::string_view source) {
  Scenario s = parse_syntax(source);
  auto diags = validate(s);
  if (!diags.empty()) throw ParseError(std::move(diags));
  return s;
}

std::vector<Diagnostic> validate(const Scenario& s) {
  try {
    return Validator(s).run();
  } catch (const std::exception& e) {
    return {{std::nullopt, {}, "internal error", e.what()}};
  }
}

std::string print(const Scenario& s) {
  std::ostringstream os;
  os << "scenario " << s.name << "\n";
  for (const auto& sys : s.systems) os << "system " << sys.id << " dim " << sys.dim << "\n";
  for (const auto& a : s.agents) {
    os << "agent " << a.name;
    for (const auto& r : a.records) {
      os << " record " << r.id << " dim " << r.dim << " init " << r.init.str();
      if (!r.pointer.empty()) os << " pointer " << r.pointer;
    }
    os << "\n";
  }
  for (const auto& o : s.observers) os << "observer " << o.name << "\n";
  for (const auto& b : s.bases) {
    os << "basis " << b.name;
    if (b.preset == BasisPreset::kRaw) {
      os << " dims " << print_dims(b.dims) << " vectors";
      for (const auto& v : b.vectors) os << " " << print_vector(v);
    } else {
      os << " = " << preset_name(b.preset);
      if (b.dims != preset_dims(b.preset)) os << " dims " << print_dims(b.dims);
    }
    if (!b.labels.empty()) {
      os << " labels";
      for (const auto& l : b.labels) os << " " << l.str();
    }
    os << "\n";
  }
  os << "\n";
  for (const auto& e : s.timeline) {
    std::visit(EventPrinter{os}, e.body);
    os << "\n";
  }
  return os.str();
}

}  // namespace wfcheck::scenario
