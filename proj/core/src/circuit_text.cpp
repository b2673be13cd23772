#include "qls/circuit_text.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <sstream>

namespace qls {

namespace {

void write_indent(std::ostream& out, int depth) {
  for (int i = 0; i < depth; ++i) out << "  ";
}

void write_cond(std::ostream& out, const std::optional<Condition>& cond) {
  if (!cond) return;
  out << ", cond=" << (cond->on ? "on" : "off") << '@' << cond->level;
}

const char* kind_name(SwitchKind kind) {
  switch (kind) {
    case SwitchKind::Split: return "split";
    case SwitchKind::MergeMinus: return "merge_minus";
    case SwitchKind::MergeMinusDagger: return "merge_minus_dag";
  }
  return "?";
}

void write_block(std::ostream& out, const StageList& stages, int depth);

void write_stage(std::ostream& out, const Stage& stage, int depth) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SwitchStage>) {
          out << "SWITCH{level=" << s.level << ", kind=" << kind_name(s.kind) << '}';
        } else if constexpr (std::is_same_v<T, BranchStage>) {
          out << "BRANCH{level=" << s.level << ", on=";
          write_block(out, s.on_block, depth);
          out << ", off=";
          write_block(out, s.off_block, depth);
          out << '}';
        } else if constexpr (std::is_same_v<T, WriteStage>) {
          out << "WRITE{target=" << (s.target == WriteTarget::Index ? "index" : "value")
              << ", pattern=" << s.pattern;
          write_cond(out, s.cond);
          out << '}';
        } else if constexpr (std::is_same_v<T, PhaseStage>) {
          out << "PHASE{pairs=[";
          bool first = true;
          for (const auto& [index, value] : s.pairs.pairs()) {
            if (!first) out << ", ";
            first = false;
            out << '(' << index << ", " << value << ')';
          }
          out << ']';
          write_cond(out, s.cond);
          out << '}';
        } else if constexpr (std::is_same_v<T, IndexHadamardStage>) {
          out << "HIDX{qubit=" << s.qubit << '}';
        }
      },
      stage.node);
}

void write_block(std::ostream& out, const StageList& stages, int depth) {
  if (stages.empty()) {
    out << "[]";
    return;
  }
  out << "[\n";
  for (std::size_t i = 0; i < stages.size(); ++i) {
    write_indent(out, depth + 1);
    write_stage(out, stages[i], depth + 1);
    out << (i + 1 < stages.size() ? ",\n" : "\n");
  }
  write_indent(out, depth);
  out << ']';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  int line() const { return line_; }
  int column() const { return column_; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  void expect(char c) {
    if (peek() != c) {
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
    advance();
  }

  bool try_consume(char c) {
    if (at_end() || text_[pos_] != c) return false;
    advance();
    return true;
  }

  // Line and column where the most recent identifier or integer began.
  int token_line() const { return token_line_; }
  int token_column() const { return token_column_; }

  [[noreturn]] void fail_at_token(const std::string& message) const {
    throw ParseError(message, token_line_, token_column_);
  }

  std::string identifier() {
    skip_space();
    mark_token();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      advance();
    }
    if (start == pos_) fail("expected an identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::uint64_t integer() {
    skip_space();
    mark_token();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      advance();
    }
    if (start == pos_) fail("expected an integer");
    std::uint64_t out = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[i] - '0');
      if (out > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        fail("integer overflow");
      }
      out = out * 10 + digit;
    }
    return out;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void mark_token() {
    token_line_ = line_;
    token_column_ = column_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  int token_line_ = 1;
  int token_column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  PathCircuit circuit() {
    expect_tag("CIRCUIT");
    lex_.expect('{');
    const std::uint64_t n = field_int("n");
    lex_.expect(',');
    const std::uint64_t m = field_int("m");
    lex_.expect(',');
    expect_field("stages");
    StageList stages = block();
    lex_.expect('}');
    if (!lex_.at_end()) lex_.fail("trailing text after circuit");
    if (n > 32 || m > 32) lex_.fail("register size out of range");
    try {
      PathCircuit out{make_layout(static_cast<int>(n), static_cast<int>(m)),
                      std::move(stages)};
      validate(out);
      return out;
    } catch (const std::invalid_argument& e) {
      lex_.fail(e.what());
    } catch (const std::out_of_range& e) {
      lex_.fail(e.what());
    }
  }

 private:
  void expect_tag(const std::string& want) {
    const std::string got = lex_.identifier();
    if (got != want) {
      lex_.fail_at_token("unknown tag '" + got + "', expected " + want);
    }
  }

  void expect_field(const std::string& name) {
    const std::string got = lex_.identifier();
    if (got != name) {
      lex_.fail_at_token("expected field '" + name + "', found '" + got + "'");
    }
    lex_.expect('=');
  }

  std::uint64_t field_int(const std::string& name) {
    expect_field(name);
    return lex_.integer();
  }

  int field_small_int(const std::string& name) {
    const std::uint64_t v = field_int(name);
    if (v > std::numeric_limits<int>::max()) lex_.fail("field value out of range");
    return static_cast<int>(v);
  }

  StageList block() {
    StageList stages;
    lex_.expect('[');
    if (lex_.try_consume(']')) return stages;
    while (true) {
      stages.push_back(stage());
      if (lex_.try_consume(']')) return stages;
      lex_.expect(',');
    }
  }

  Stage stage() {
    const std::string tag = lex_.identifier();
    const int tag_line = lex_.token_line();
    const int tag_column = lex_.token_column();
    lex_.expect('{');
    Stage out;
    if (tag == "SWITCH") {
      SwitchStage s;
      s.level = field_small_int("level");
      lex_.expect(',');
      expect_field("kind");
      s.kind = kind();
      out.node = s;
    } else if (tag == "BRANCH") {
      BranchStage s;
      s.level = field_small_int("level");
      lex_.expect(',');
      expect_field("on");
      s.on_block = block();
      lex_.expect(',');
      expect_field("off");
      s.off_block = block();
      out.node = std::move(s);
    } else if (tag == "WRITE") {
      WriteStage s;
      expect_field("target");
      s.target = target();
      lex_.expect(',');
      s.pattern = field_int("pattern");
      s.cond = maybe_cond();
      out.node = s;
    } else if (tag == "PHASE") {
      PhaseStage s;
      expect_field("pairs");
      s.pairs = pairs();
      s.cond = maybe_cond();
      out.node = std::move(s);
    } else if (tag == "HIDX") {
      IndexHadamardStage s;
      s.qubit = field_small_int("qubit");
      out.node = s;
    } else {
      throw ParseError("unknown tag '" + tag + "'", tag_line, tag_column);
    }
    lex_.expect('}');
    return out;
  }

  SwitchKind kind() {
    const std::string name = lex_.identifier();
    if (name == "split") return SwitchKind::Split;
    if (name == "merge_minus") return SwitchKind::MergeMinus;
    if (name == "merge_minus_dag") return SwitchKind::MergeMinusDagger;
    lex_.fail_at_token("unknown switch kind '" + name + "'");
  }

  WriteTarget target() {
    const std::string name = lex_.identifier();
    if (name == "index") return WriteTarget::Index;
    if (name == "value") return WriteTarget::Value;
    lex_.fail_at_token("unknown write target '" + name + "'");
  }

  PairSet pairs() {
    std::vector<PairSet::Pair> out;
    lex_.expect('[');
    if (lex_.try_consume(']')) return PairSet{};
    while (true) {
      lex_.expect('(');
      const std::uint64_t index = lex_.integer();
      lex_.expect(',');
      const std::uint64_t value = lex_.integer();
      lex_.expect(')');
      out.emplace_back(index, value);
      if (lex_.try_consume(']')) break;
      lex_.expect(',');
    }
    try {
      return PairSet(std::move(out));
    } catch (const std::invalid_argument& e) {
      lex_.fail(e.what());
    }
  }

  std::optional<Condition> maybe_cond() {
    if (!lex_.try_consume(',')) return std::nullopt;
    expect_field("cond");
    const std::string branch = lex_.identifier();
    if (branch != "on" && branch != "off") {
      lex_.fail_at_token("condition branch must be 'on' or 'off'");
    }
    lex_.expect('@');
    Condition cond;
    cond.on = branch == "on";
    cond.level = field_small_level();
    return cond;
  }

  int field_small_level() {
    const std::uint64_t v = lex_.integer();
    if (v > std::numeric_limits<int>::max()) lex_.fail("condition level out of range");
    return static_cast<int>(v);
  }

  Lexer lex_;
};

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

std::string serialize(const PathCircuit& circuit) {
  std::ostringstream out;
  out << "CIRCUIT{n=" << circuit.layout.index_qubits
      << ", m=" << circuit.layout.value_qubits << ", stages=";
  write_block(out, circuit.stages, 0);
  out << "}\n";
  return out.str();
}

PathCircuit parse_circuit(std::string_view text) {
  return Parser(text).circuit();
}

}  // namespace qls
