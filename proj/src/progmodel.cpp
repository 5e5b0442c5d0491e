#include "uol/progmodel.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace uol {

namespace mp = boost::multiprecision;

ProgramIndex::ProgramIndex(Natural value) : value_(std::move(value)) {
  if (value_ < 0) throw Error("program index must be a natural number");
}

std::string ProgramIndex::to_string() const { return value_.str(); }

ProgramIndex ProgramIndex::parse(std::string_view decimal) {
  if (decimal.empty() ||
      !std::all_of(decimal.begin(), decimal.end(), [](char c) { return std::isdigit(c); }))
    throw ParseError("not a decimal program index: '" + std::string(decimal) + "'");
  return ProgramIndex(Natural(std::string(decimal)));
}

// ---- pairing ---------------------------------------------------------------

Natural cantor_pair(const Natural& a, const Natural& b) {
  Natural s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<Natural, Natural> cantor_unpair(const Natural& z) {
  Natural w = (mp::sqrt(Natural(8 * z + 1)) - 1) / 2;
  Natural t = w * (w + 1) / 2;
  Natural b = z - t;
  return {w - b, b};
}

std::uint64_t cantor_pair_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return (s % 2 == 0 ? (s / 2) * (s + 1) : s * ((s + 1) / 2)) + b;
}

Natural word_to_natural(std::string_view bits) {
  std::vector<unsigned char> digits;
  digits.reserve(bits.size() + 1);
  digits.push_back(1);
  for (char c : bits) {
    if (c != '0' && c != '1') throw ParseError("binary word expected, got '" + std::string(bits) + "'");
    digits.push_back(static_cast<unsigned char>(c - '0'));
  }
  Natural n;
  mp::import_bits(n, digits.begin(), digits.end(), 1, true);
  return n - 1;
}

std::string natural_to_word(const Natural& n) {
  Natural m = n + 1;
  std::size_t top = mp::msb(m);
  std::string out(top, '0');
  for (std::size_t i = 0; i < top; ++i)
    if (mp::bit_test(m, top - 1 - i)) out[i] = '1';
  return out;
}

Natural zigzag_to_natural(const Natural& z) { return z >= 0 ? Natural(2 * z) : Natural(-2 * z - 1); }

Natural natural_to_zigzag(const Natural& n) {
  return (n % 2 == 0) ? Natural(n / 2) : Natural(-(n + 1) / 2);
}

// ---- numbering -------------------------------------------------------------

namespace {

constexpr unsigned kTagEventuallyConstant = 0;
constexpr unsigned kTagThreshold = 1;
constexpr unsigned kTagTable = 2;
constexpr unsigned kTagMachine = 3;

Natural encode_block(const Block& block);

Natural encode_statement(const Statement& st) {
  switch (st.op) {
    case Statement::Op::kInc: return 3 * st.reg;
    case Statement::Op::kDec: return 3 * st.reg + 1;
    case Statement::Op::kWhile: return 3 * cantor_pair(st.reg, encode_block(st.body)) + 2;
  }
  return 0;
}

Natural encode_block(const Block& block) {
  Natural n = 0;
  for (auto it = block.rbegin(); it != block.rend(); ++it) n = 1 + cantor_pair(encode_statement(*it), n);
  return n;
}

Block decode_block(Natural n);

Statement decode_statement(const Natural& s) {
  Statement st;
  unsigned tag = static_cast<unsigned>(s % 3);
  Natural payload = s / 3;
  if (tag == 0) {
    st.op = Statement::Op::kInc;
    st.reg = payload;
  } else if (tag == 1) {
    st.op = Statement::Op::kDec;
    st.reg = payload;
  } else {
    st.op = Statement::Op::kWhile;
    auto [reg, body] = cantor_unpair(payload);
    st.reg = reg;
    st.body = decode_block(body);
  }
  return st;
}

Block decode_block(Natural n) {
  Block out;
  while (n != 0) {
    auto [head, tail] = cantor_unpair(n - 1);
    out.push_back(decode_statement(head));
    n = tail;
  }
  return out;
}

Natural encode_table(const std::map<Point, Label>& table) {
  Natural n = 0;
  if (table.empty()) return n;
  Point top = table.rbegin()->first;
  for (Point x = top + 1; x-- > 0;) {
    auto it = table.find(x);
    n = n * 3 + (it == table.end() ? 0 : (it->second == 0 ? 1 : 2));
    if (x == 0) break;
  }
  return n;
}

std::map<Point, Label> decode_table(Natural n) {
  std::map<Point, Label> out;
  for (Point x = 0; n != 0; ++x) {
    unsigned digit = static_cast<unsigned>(n % 3);
    n /= 3;
    if (digit == 1) out[x] = 0;
    if (digit == 2) out[x] = 1;
  }
  return out;
}

void check_bit(Label b, const char* what) {
  if (b != 0 && b != 1) throw Error(std::string(what) + " must be a bit");
}

}  // namespace

bool is_structurally_total(const ProgramTerm& p) { return !std::holds_alternative<Machine>(p); }

ProgramIndex encode(const ProgramTerm& p) {
  Natural payload;
  unsigned tag = 0;
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, EventuallyConstant>) {
          check_bit(t.tail, "tail");
          tag = kTagEventuallyConstant;
          payload = 2 * word_to_natural(t.prefix) + t.tail;
        } else if constexpr (std::is_same_v<T, Threshold>) {
          tag = kTagThreshold;
          if (t.kind == ThresholdKind::kNat) {
            if (t.cut < 0) throw Error("threshold on the naturals needs a natural cut");
            payload = 2 * t.cut;
          } else {
            payload = 2 * zigzag_to_natural(t.cut) + 1;
          }
        } else if constexpr (std::is_same_v<T, FiniteTable>) {
          check_bit(t.fallback, "table default");
          for (const auto& [x, b] : t.table) check_bit(b, "table entry");
          tag = kTagTable;
          payload = 2 * encode_table(t.table) + t.fallback;
        } else {
          tag = kTagMachine;
          payload = encode_block(t.code);
        }
      },
      p);
  return ProgramIndex(4 * payload + tag);
}

ProgramTerm decode(const ProgramIndex& e) {
  const Natural& v = e.value();
  unsigned tag = static_cast<unsigned>(v % 4);
  Natural payload = v / 4;
  switch (tag) {
    case kTagEventuallyConstant:
      return EventuallyConstant{natural_to_word(payload / 2), static_cast<Label>(payload % 2)};
    case kTagThreshold:
      if (payload % 2 == 0) return Threshold{ThresholdKind::kNat, payload / 2};
      return Threshold{ThresholdKind::kInt, natural_to_zigzag(payload / 2)};
    case kTagTable:
      return FiniteTable{decode_table(payload / 2), static_cast<Label>(payload % 2)};
    default:
      return Machine{decode_block(payload)};
  }
}

ProgramIndex make_eventually_constant(std::string_view alpha, Label tail) {
  return encode(EventuallyConstant{std::string(alpha), tail});
}

// ---- interpretation --------------------------------------------------------

namespace {

struct Instr {
  enum class Kind { kInc, kDec, kTest, kJump } kind;
  std::size_t slot = 0;    // kInc, kDec, kTest
  std::size_t target = 0;  // kTest: exit address; kJump: loop head
};

class Compiler {
 public:
  std::vector<Instr> compile(const Block& code) {
    slots_.clear();
    slots_.emplace(Natural(0), 0);
    slots_.emplace(Natural(1), 1);
    std::vector<Instr> out;
    emit(code, out);
    return out;
  }
  std::size_t slot_count() const { return slots_.size(); }

 private:
  std::size_t slot(const Natural& reg) {
    auto [it, inserted] = slots_.emplace(reg, slots_.size());
    return it->second;
  }

  void emit(const Block& block, std::vector<Instr>& out) {
    for (const Statement& st : block) {
      switch (st.op) {
        case Statement::Op::kInc: out.push_back({Instr::Kind::kInc, slot(st.reg), 0}); break;
        case Statement::Op::kDec: out.push_back({Instr::Kind::kDec, slot(st.reg), 0}); break;
        case Statement::Op::kWhile: {
          std::size_t head = out.size();
          out.push_back({Instr::Kind::kTest, slot(st.reg), 0});
          emit(st.body, out);
          out.push_back({Instr::Kind::kJump, 0, head});
          out[head].target = out.size();
          break;
        }
      }
    }
  }

  std::map<Natural, std::size_t> slots_;
};

BoundedResult run_instrs(const std::vector<Instr>& prog, std::size_t slots, Point x,
                         std::uint64_t steps) {
  std::vector<std::uint64_t> regs(slots, 0);
  regs[0] = x;
  std::uint64_t used = 0;
  std::size_t pc = 0;
  while (pc < prog.size()) {
    const Instr& in = prog[pc];
    if (in.kind == Instr::Kind::kJump) {
      pc = in.target;
      continue;
    }
    if (used == steps) return {std::nullopt, used};
    ++used;
    switch (in.kind) {
      case Instr::Kind::kInc: ++regs[in.slot]; ++pc; break;
      case Instr::Kind::kDec:
        if (regs[in.slot] > 0) --regs[in.slot];
        ++pc;
        break;
      case Instr::Kind::kTest: pc = regs[in.slot] != 0 ? pc + 1 : in.target; break;
      case Instr::Kind::kJump: break;
    }
  }
  return {regs[1] != 0 ? 1 : 0, used};
}

Label eval_structural(const ProgramTerm& p, Point x) {
  return std::visit(
      [&](const auto& t) -> Label {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, EventuallyConstant>) {
          return x < t.prefix.size() ? Label(t.prefix[x] - '0') : t.tail;
        } else if constexpr (std::is_same_v<T, Threshold>) {
          Natural point = t.kind == ThresholdKind::kNat ? Natural(x) : natural_to_zigzag(Natural(x));
          return point >= t.cut ? 1 : 0;
        } else if constexpr (std::is_same_v<T, FiniteTable>) {
          auto it = t.table.find(x);
          return it == t.table.end() ? t.fallback : it->second;
        } else {
          return 0;
        }
      },
      p);
}

}  // namespace

BoundedResult run_bounded(const ProgramTerm& p, Point x, std::uint64_t steps) {
  if (const auto* m = std::get_if<Machine>(&p)) {
    Compiler c;
    auto prog = c.compile(m->code);
    return run_instrs(prog, c.slot_count(), x, steps);
  }
  if (steps == 0) return {std::nullopt, 0};
  return {eval_structural(p, x), 1};
}

BoundedResult eval_bounded(const ProgramIndex& e, Point x, StepBudget s) {
  return run_bounded(decode(e), x, s.s);
}

Label evaluate_term(const ProgramTerm& p, Point x, Fuel& fuel) {
  BoundedResult r = run_bounded(p, x, fuel.remaining());
  if (!r.halted()) fuel.charge(fuel.remaining() + 1);
  fuel.charge(r.steps);
  return *r.value;
}

// ---- surface syntax --------------------------------------------------------

namespace {

class MachineParser {
 public:
  explicit MachineParser(std::string_view text) : text_(text) {}

  Block parse_all() {
    Block b = parse_block();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return b;
  }

 private:
  Block parse_block() {
    Block out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == '}') return out;
      if (text_[pos_] == ';') {
        ++pos_;
        continue;
      }
      out.push_back(parse_statement());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] != ';' && text_[pos_] != '}')
        fail("expected ';' between statements");
    }
  }

  Statement parse_statement() {
    std::string word = identifier();
    Statement st;
    if (word == "inc") {
      st.op = Statement::Op::kInc;
      st.reg = number();
    } else if (word == "dec") {
      st.op = Statement::Op::kDec;
      st.reg = number();
    } else if (word == "while") {
      st.op = Statement::Op::kWhile;
      st.reg = number();
      expect('{');
      st.body = parse_block();
      expect('}');
    } else {
      fail("unknown statement '" + word + "'");
    }
    return st;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Natural number() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == 'r') ++pos_;
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("register number expected");
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("machine syntax at " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string_view::npos ? p : p - start));
    if (p == std::string_view::npos) return out;
    start = p + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError("natural number expected, got '" + std::string(s) + "'");
  return v;
}

Label parse_bit(std::string_view s) {
  if (s == "0") return 0;
  if (s == "1") return 1;
  throw ParseError("bit expected, got '" + std::string(s) + "'");
}

void format_block(const Block& b, std::ostringstream& os) {
  bool first = true;
  for (const Statement& st : b) {
    if (!first) os << "; ";
    first = false;
    switch (st.op) {
      case Statement::Op::kInc: os << "inc r" << st.reg; break;
      case Statement::Op::kDec: os << "dec r" << st.reg; break;
      case Statement::Op::kWhile:
        os << "while r" << st.reg << " {";
        if (!st.body.empty()) {
          os << ' ';
          format_block(st.body, os);
          os << ' ';
        }
        os << '}';
        break;
    }
  }
}

}  // namespace

ProgramTerm parse_term(std::string_view text) {
  text = trim(text);
  if (text == "zeros") return EventuallyConstant{"", 0};
  if (text == "ones") return EventuallyConstant{"", 1};
  if (text.starts_with("singleton@")) {
    FiniteTable t;
    t.table[parse_u64(text.substr(10))] = 1;
    return t;
  }
  if (text.starts_with("m:")) return Machine{MachineParser(text.substr(2)).parse_all()};
  auto parts = split(text, ':');
  if (parts[0] == "ec" && parts.size() == 3) {
    EventuallyConstant ec{std::string(parts[1]), parse_bit(parts[2])};
    word_to_natural(ec.prefix);  // validates
    return ec;
  }
  if (parts[0] == "thr" && parts.size() == 3) {
    std::string cut(parts[2]);
    bool negative = !cut.empty() && cut[0] == '-';
    std::string digits = negative ? cut.substr(1) : cut;
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }))
      throw ParseError("threshold cut expected, got '" + cut + "'");
    Natural value(digits);
    if (negative) value = -value;
    if (parts[1] == "nat") {
      if (negative) throw ParseError("threshold on the naturals needs a natural cut");
      return Threshold{ThresholdKind::kNat, value};
    }
    if (parts[1] == "int") return Threshold{ThresholdKind::kInt, value};
  }
  if (parts[0] == "tab" && parts.size() == 3) {
    FiniteTable t;
    t.fallback = parse_bit(parts[2]);
    if (!trim(parts[1]).empty()) {
      for (std::string_view entry : split(parts[1], ',')) {
        auto kv = split(trim(entry), '=');
        if (kv.size() != 2) throw ParseError("table entry x=b expected");
        Point x = parse_u64(kv[0]);
        if (t.table.count(x)) throw ParseError("duplicate table key " + std::to_string(x));
        t.table[x] = parse_bit(kv[1]);
      }
    }
    return t;
  }
  throw ParseError("cannot parse program term '" + std::string(text) + "'");
}

std::string format_term(const ProgramTerm& p) {
  std::ostringstream os;
  std::visit(
      [&](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, EventuallyConstant>) {
          os << "ec:" << t.prefix << ':' << t.tail;
        } else if constexpr (std::is_same_v<T, Threshold>) {
          os << "thr:" << (t.kind == ThresholdKind::kNat ? "nat" : "int") << ':' << t.cut;
        } else if constexpr (std::is_same_v<T, FiniteTable>) {
          os << "tab:";
          bool first = true;
          for (const auto& [x, b] : t.table) {
            if (!first) os << ',';
            first = false;
            os << x << '=' << b;
          }
          os << ':' << t.fallback;
        } else {
          os << "m:";
          format_block(t.code, os);
        }
      },
      p);
  return os.str();
}

std::vector<ProgramTerm> parse_program_file(std::string_view contents) {
  std::vector<ProgramTerm> out;
  for (std::string_view line : split(contents, '\n')) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_term(line));
  }
  return out;
}

// ---- c.e. enumeration ------------------------------------------------------

DovetailGenerator::DovetailGenerator(std::function<bool(std::uint64_t, std::uint64_t)> relation,
                                     std::function<ProgramIndex(std::uint64_t)> to_index)
    : relation_(std::move(relation)), to_index_(std::move(to_index)) {}

std::optional<ProgramIndex> DovetailGenerator::step() {
  auto [n_big, s_big] = cantor_unpair(Natural(t_++));
  auto n = static_cast<std::uint64_t>(n_big);
  auto s = static_cast<std::uint64_t>(s_big);
  if (n < emitted_.size() && emitted_[n]) return std::nullopt;
  if (!relation_(n, s)) return std::nullopt;
  if (emitted_.size() <= n) emitted_.resize(n + 1, false);
  emitted_[n] = true;
  return to_index_(n);
}

std::optional<ProgramIndex> SequenceGenerator::step() {
  if (done_) return std::nullopt;
  auto v = f_(next_++);
  if (!v) done_ = true;
  return v;
}

std::unique_ptr<CeGenerator> singletons_generator() {
  return std::make_unique<SequenceGenerator>([](std::uint64_t i) -> std::optional<ProgramIndex> {
    FiniteTable t;
    t.table[i] = 1;
    return encode(t);
  });
}

std::unique_ptr<CeGenerator> finite_support_generator() {
  // Support sets are read off the binary digits of n.
  return std::make_unique<DovetailGenerator>(
      [](std::uint64_t, std::uint64_t) { return true; },
      [](std::uint64_t n) {
        FiniteTable t;
        for (Point x = 0; x < 64; ++x)
          if ((n >> x) & 1U) t.table[x] = 1;
        return encode(t);
      });
}

std::unique_ptr<CeGenerator> empty_generator() {
  return std::make_unique<SequenceGenerator>([](std::uint64_t) { return std::nullopt; });
}

std::vector<ProgramIndex> enumerate_ce(const std::function<std::unique_ptr<CeGenerator>()>& make,
                                       std::uint64_t steps) {
  auto gen = make();
  std::vector<ProgramIndex> out;
  for (std::uint64_t i = 0; i < steps; ++i)
    if (auto v = gen->step()) out.push_back(std::move(*v));
  return out;
}

}  // namespace uol
