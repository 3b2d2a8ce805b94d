#include "glho/parse.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace glho {

namespace {

// Minimal cursor over a token stream; all grammars here are regular
// enough that a scanner with one-symbol lookahead suffices.
class Cursor {
  public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool done() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) {
            throw ParseError(std::string("expected '") + c + "' at offset " + std::to_string(pos_) +
                             " in \"" + std::string(text_) + "\"");
        }
    }

    bool accept_word(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(text_[start])))) {
            throw ParseError("expected an integer at offset " + std::to_string(start) + " in \"" +
                             std::string(text_) + "\"");
        }
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<std::int64_t> parse_int_list(Cursor& cur, char terminator) {
    std::vector<std::int64_t> out;
    if (cur.peek() == terminator || cur.peek() == '\0') return out;
    out.push_back(cur.integer());
    while (cur.accept(',')) out.push_back(cur.integer());
    return out;
}

}  // namespace

Weight parse_weight(std::string_view text) {
    Cursor cur(text);
    std::vector<std::int64_t> first = parse_int_list(cur, '|');
    cur.expect('|');
    std::vector<std::int64_t> second = parse_int_list(cur, '\0');
    if (!cur.done()) throw ParseError("trailing input in weight \"" + std::string(text) + "\"");
    std::vector<std::int64_t> rows = first;
    rows.insert(rows.end(), second.begin(), second.end());
    try {
        return Weight::make(static_cast<int>(first.size()), static_cast<int>(second.size()),
                            std::move(rows));
    } catch (const InvalidWeight& e) {
        throw ParseError(std::string("invalid weight: ") + e.what());
    }
}

std::string format_weight(const Weight& w) {
    std::ostringstream os;
    for (int i = 0; i < w.m; ++i) os << (i ? "," : "") << w.row(i);
    os << '|';
    for (int j = 0; j < w.n; ++j) os << (j ? "," : "") << w.row(w.m + j);
    return os.str();
}

namespace {

Indec parse_indec(Cursor& cur) {
    if (cur.accept_word("R[")) {
        std::int64_t a = cur.integer();
        cur.expect(',');
        std::int64_t b = cur.integer();
        cur.expect(']');
        if (a > b) throw ParseError("interval needs a <= b");
        return Indec::R(a, b);
    }
    if (cur.accept_word("B[")) {
        std::int64_t a = cur.integer();
        cur.expect(',');
        std::int64_t b = cur.integer();
        cur.expect(']');
        if (a > b) throw ParseError("interval needs a <= b");
        return Indec::B(a, b);
    }
    if (cur.accept_word("P(")) {
        std::int64_t i = cur.integer();
        cur.expect(')');
        return Indec::P(i);
    }
    if (cur.accept_word("L(")) {
        std::int64_t i = cur.integer();
        cur.expect(')');
        return Indec::L(i);
    }
    throw ParseError("expected R[a,b], B[a,b], P(i) or L(i)");
}

}  // namespace

BlockObject parse_block_object(std::string_view text) {
    Cursor cur(text);
    BlockObject obj;
    if (cur.accept('0') && cur.done()) return obj;
    cur = Cursor(text);
    do {
        std::int64_t mult = 1;
        char c = cur.peek();
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            mult = cur.integer();
            cur.expect('*');
        }
        if (mult < 0) throw ParseError("summand multiplicities must be nonnegative");
        obj.add(parse_indec(cur), mult);
    } while (cur.accept('+'));
    if (!cur.done()) throw ParseError("trailing input in object \"" + std::string(text) + "\"");
    return obj;
}

namespace {

std::string format_indec(const Indec& s) {
    std::ostringstream os;
    switch (s.kind) {
        case IndecKind::P: os << "P(" << s.a << ")"; break;
        case IndecKind::R:
            if (s.simple()) {
                os << "L(" << s.a << ")";
            } else {
                os << "R[" << s.a << "," << s.b << "]";
            }
            break;
        case IndecKind::B: os << "B[" << s.a << "," << s.b << "]"; break;
    }
    return os.str();
}

}  // namespace

std::string format_block_object(const BlockObject& x) {
    if (x.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, mult] : x.summands) {
        if (!first) os << " + ";
        first = false;
        if (mult != 1) os << mult << "*";
        os << format_indec(s);
    }
    return os.str();
}

HoObject parse_ho_object(std::string_view text) {
    Cursor cur(text);
    HoObject obj;
    if (cur.accept('0') && cur.done()) return obj;
    cur = Cursor(text);
    do {
        std::int64_t mult = 1;
        char c = cur.peek();
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            mult = cur.integer();
            cur.expect('*');
        }
        if (mult < 0) throw ParseError("summand multiplicities must be nonnegative");
        if (cur.accept_word("S(")) {
            std::int64_t i = cur.integer();
            cur.expect(')');
            obj.add(HoSummand::S(i), mult);
        } else if (cur.accept_word("EvenR[")) {
            std::int64_t a = cur.integer();
            cur.expect(',');
            std::int64_t b = cur.integer();
            cur.expect(']');
            if (a > b || (b - a) % 2 == 0) throw ParseError("EvenR needs an even-length interval");
            obj.add(HoSummand::EvenR(a, b), mult);
        } else {
            throw ParseError("expected S(i) or EvenR[a,b]");
        }
    } while (cur.accept('+'));
    if (!cur.done()) throw ParseError("trailing input in object \"" + std::string(text) + "\"");
    return obj;
}

std::string format_ho_object(const HoObject& x) {
    if (x.zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, mult] : x.summands) {
        if (!first) os << " + ";
        first = false;
        if (mult != 1) os << mult << "*";
        if (s.even_r) {
            os << "EvenR[" << s.a << "," << s.b << "]";
        } else {
            os << "S(" << s.a << ")";
        }
    }
    return os.str();
}

Partition parse_partition(std::string_view text) {
    Cursor cur(text);
    if (cur.done()) return Partition{};
    if (cur.accept('0') && cur.done()) return Partition{};
    cur = Cursor(text);
    std::vector<int> parts;
    parts.push_back(static_cast<int>(cur.integer()));
    while (cur.accept(',')) parts.push_back(static_cast<int>(cur.integer()));
    if (!cur.done()) throw ParseError("trailing input in partition \"" + std::string(text) + "\"");
    try {
        return Partition::make(std::move(parts));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid partition: ") + e.what());
    }
}

std::string format_partition(const Partition& p) {
    if (p.rows() == 0) return "0";
    std::ostringstream os;
    for (int i = 0; i < p.rows(); ++i) os << (i ? "," : "") << p.parts[static_cast<std::size_t>(i)];
    return os.str();
}

KacFlagInput parse_flag(std::string_view text) {
    Cursor cur(text);
    KacFlagInput flag;
    do {
        if (!cur.accept_word("V(")) throw ParseError("expected V(i)@deg");
        std::int64_t label = cur.integer();
        cur.expect(')');
        cur.expect('@');
        std::int64_t deg = cur.integer();
        flag.entries.emplace_back(label, deg);
    } while (cur.accept('+') || cur.accept(','));
    if (!cur.done()) throw ParseError("trailing input in flag \"" + std::string(text) + "\"");
    return flag;
}

std::string format_flag_label(const FlagLabel& l) {
    std::string out = "V(" + std::to_string(l.index) + ")";
    if (l.dual) out += "*";
    return out;
}

}  // namespace glho
