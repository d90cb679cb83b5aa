// Copyright 2026 The ontobench Authors
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

#include "ontobench/notation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

namespace ontobench {

ParseError::ParseError(std::size_t line, std::size_t col, const std::string &message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
      line_(line),
      col_(col),
      message_(message) {
}

std::string ParseError::located(std::string_view file) const {
    return std::string(file) + ":" + what();
}

namespace {

bool is_label_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '+' ||
           c == '\'' || c == '-';
}

bool is_digit(char c) {
    return c >= '0' && c <= '9';
}

std::string describe(char c) {
    if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f) {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "byte 0x%02x", static_cast<unsigned char>(c));
        return buf;
    }
    return std::string("'") + c + "'";
}

/// Character cursor that tracks 1-based line and column.
class Cursor {
   public:
    Cursor(std::string_view text, std::size_t line, std::size_t col) : text_(text), line_(line), col_(col) {
    }

    bool eof() const {
        return pos_ >= text_.size();
    }
    char peek() const {
        return eof() ? '\0' : text_[pos_];
    }
    bool starts_with(std::string_view s) const {
        return text_.substr(pos_).starts_with(s);
    }
    void advance() {
        if (eof()) {
            return;
        }
        if (text_[pos_] == '\n') {
            line_++;
            col_ = 1;
        } else {
            col_++;
        }
        pos_++;
    }
    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    [[noreturn]] void fail(const std::string &message) const {
        throw ParseError(line_, col_, message);
    }

    void expect(char c, const char *context) {
        skip_ws();
        if (peek() != c) {
            fail(std::string("expected '") + c + "' " + context + (eof() ? ", found end of input" : ", found " + describe(peek())));
        }
        advance();
    }

    /// Unsigned decimal number with optional fraction and exponent.
    double number() {
        skip_ws();
        std::size_t start = pos_;
        Cursor at = *this;
        bool digits = false;
        while (is_digit(peek())) {
            advance();
            digits = true;
        }
        if (peek() == '.') {
            advance();
            while (is_digit(peek())) {
                advance();
                digits = true;
            }
        }
        if (!digits) {
            at.fail(eof() ? "expected a number, found end of input" : "expected a number, found " + describe(at.peek()));
        }
        if (peek() == 'e' || peek() == 'E') {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) {
                p++;
            }
            if (p < text_.size() && is_digit(text_[p])) {
                while (pos_ < p) {
                    advance();
                }
                while (is_digit(peek())) {
                    advance();
                }
            }
        }
        double v = 0;
        std::string_view tok = text_.substr(start, pos_ - start);
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
            at.fail("number '" + std::string(tok) + "' is out of range");
        }
        return v;
    }

    double signed_number() {
        skip_ws();
        double sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            advance();
        }
        return sign * number();
    }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_;
    std::size_t col_;
};

/// '(' number (',' number)? ')'
Amplitude paren_coefficient(Cursor &cur) {
    cur.expect('(', "to open a coefficient");
    double re = cur.signed_number();
    double im = 0;
    cur.skip_ws();
    if (cur.peek() == ',') {
        cur.advance();
        im = cur.signed_number();
    }
    cur.expect(')', "to close the coefficient");
    return {re, im};
}

/// coeff, or nullopt when the next token starts a ket.
std::optional<Amplitude> coefficient(Cursor &cur) {
    cur.skip_ws();
    char c = cur.peek();
    if (c == '|') {
        return std::nullopt;
    }
    if (c == 'i') {
        cur.advance();
        return Amplitude{0, 1};
    }
    if (is_digit(c) || c == '.') {
        double v = cur.number();
        cur.skip_ws();
        if (cur.peek() == '*') {
            cur.advance();
            cur.skip_ws();
            if (cur.peek() != 'i') {
                cur.fail("expected 'i' after '*'");
            }
            cur.advance();
            return Amplitude{0, v};
        }
        if (cur.peek() == 'i') {
            cur.advance();
            return Amplitude{0, v};
        }
        return Amplitude{v, 0};
    }
    if (c == '(') {
        return paren_coefficient(cur);
    }
    if (cur.eof()) {
        cur.fail("unexpected end of input, expected a term");
    }
    cur.fail("unexpected " + describe(c) + ", expected a coefficient or a ket");
}

struct ParsedTerm {
    Amplitude coef;
    BasisLabel label;
    Cursor at;
};

BasisLabel ket_label(Cursor &cur) {
    cur.expect('|', "to open a ket");
    BasisLabel label;
    while (true) {
        cur.skip_ws();
        std::string mode;
        while (is_label_char(cur.peek())) {
            mode += cur.peek();
            cur.advance();
        }
        if (mode.empty()) {
            if (cur.eof()) {
                cur.fail("unterminated ket: expected a mode label, found end of input");
            }
            cur.fail("expected a mode label, found " + describe(cur.peek()));
        }
        label.push_back(std::move(mode));
        cur.skip_ws();
        if (cur.peek() == ',') {
            cur.advance();
            continue;
        }
        if (cur.peek() == '>') {
            cur.advance();
            return label;
        }
        if (cur.eof()) {
            cur.fail("unterminated ket: expected ',' or '>', found end of input");
        }
        cur.fail("expected ',' or '>' in ket, found " + describe(cur.peek()));
    }
}

void sum(Cursor &cur, std::vector<ParsedTerm> &terms) {
    cur.skip_ws();
    double sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
        sign = cur.peek() == '-' ? -1 : 1;
        cur.advance();
    }
    while (true) {
        auto c = coefficient(cur);
        cur.skip_ws();
        Cursor at = cur;
        BasisLabel label = ket_label(cur);
        terms.push_back({sign * c.value_or(Amplitude{1, 0}), std::move(label), at});
        cur.skip_ws();
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.peek() == '-' ? -1 : 1;
            cur.advance();
            continue;
        }
        return;
    }
}

bool starts_paren_coefficient(const Cursor &cur) {
    Cursor probe = cur;
    try {
        paren_coefficient(probe);
    } catch (const ParseError &) {
        return false;
    }
    probe.skip_ws();
    return probe.peek() == '|';
}

double scale(Cursor &cur) {
    cur.skip_ws();
    Cursor at = cur;
    double v;
    if (cur.starts_with("sqrt")) {
        for (int k = 0; k < 4; k++) {
            cur.advance();
        }
        cur.expect('(', "after 'sqrt'");
        v = std::sqrt(cur.number());
        cur.expect(')', "to close 'sqrt('");
    } else {
        v = cur.number();
    }
    if (v == 0) {
        at.fail("division by zero");
    }
    return v;
}

Ket parse_ket_at(std::string_view text, std::size_t line, std::size_t col) {
    Cursor cur(text, line, col);
    cur.skip_ws();
    if (cur.eof()) {
        cur.fail("empty ket expression");
    }
    std::vector<ParsedTerm> terms;
    if (cur.peek() == '(' && !starts_paren_coefficient(cur)) {
        cur.advance();
        sum(cur, terms);
        cur.expect(')', "to close the group");
    } else {
        sum(cur, terms);
    }
    cur.skip_ws();
    double divisor = 1;
    if (cur.peek() == '/') {
        cur.advance();
        divisor = scale(cur);
    }
    cur.skip_ws();
    if (!cur.eof()) {
        cur.fail("unexpected " + describe(cur.peek()) + " after the expression");
    }

    std::size_t arity = terms.front().label.size();
    KetBuilder b(arity);
    for (auto &t : terms) {
        if (t.label.size() != arity) {
            t.at.fail("ket has " + std::to_string(t.label.size()) + " labels but the first term has " +
                      std::to_string(arity));
        }
        b.add(std::move(t.label), t.coef / divisor);
    }
    return std::move(b).build();
}

/// Coefficient with an optional leading sign, spanning all of `text`.
Amplitude parse_entry(std::string_view text, std::size_t line, std::size_t col) {
    Cursor cur(text, line, col);
    cur.skip_ws();
    double sign = 1;
    if (cur.peek() == '+' || cur.peek() == '-') {
        sign = cur.peek() == '-' ? -1 : 1;
        cur.advance();
    }
    auto c = coefficient(cur);
    if (!c) {
        cur.fail("expected a matrix entry");
    }
    cur.skip_ws();
    if (!cur.eof()) {
        cur.fail("unexpected " + describe(cur.peek()) + " in matrix entry");
    }
    return sign * *c;
}

std::string format_number(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

}  // namespace

Ket parse_ket(std::string_view text) {
    return parse_ket_at(text, 1, 1);
}

std::string format_ket(const Ket &k, int digits) {
    if (k.empty()) {
        return "0";
    }
    Ket canon = canonicalize_phase(k);
    std::string out = "(";
    bool first = true;
    for (const auto &[label, amp] : canon.terms()) {
        double re = std::abs(amp.real()) < kPruneThreshold ? 0 : amp.real();
        double im = std::abs(amp.imag()) < kPruneThreshold ? 0 : amp.imag();
        bool negative = false;
        std::string coef;
        if (im == 0) {
            negative = re < 0;
            coef = format_number(std::abs(re), digits);
        } else if (re == 0) {
            negative = im < 0;
            coef = format_number(std::abs(im), digits) + "i";
        } else {
            coef = "(" + format_number(re, digits) + "," + format_number(im, digits) + ")";
        }
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        out += coef + "|";
        for (std::size_t i = 0; i < label.size(); i++) {
            out += (i ? "," : "") + label[i];
        }
        out += ">";
    }
    out += ")";
    return out;
}

namespace {

struct Token {
    std::string text;
    std::size_t col;
};

std::vector<Token> tokenize_line(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        if (i >= line.size()) {
            break;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            i++;
        }
        tokens.push_back({std::string(line.substr(start, i - start)), start + 1});
    }
    return tokens;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        auto p = s.find(sep, start);
        parts.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) {
            return parts;
        }
        start = p + 1;
    }
}

bool valid_label(const std::string &s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), is_label_char);
}

class BenchParser {
   public:
    explicit BenchParser(std::string_view text) : text_(text) {
    }

    BenchPlan run() {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text_.size()) {
            auto nl = text_.find('\n', start);
            std::string_view line = text_.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
            line_no++;
            handle_line(line, line_no);
            if (nl == std::string_view::npos) {
                break;
            }
            start = nl + 1;
        }
        finish(line_no);
        return std::move(plan_);
    }

   private:
    [[noreturn]] void fail(std::size_t col, const std::string &message) const {
        throw ParseError(line_, col, message);
    }

    std::size_t parse_count(const Token &t, const char *what) const {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size() || v == 0) {
            fail(t.col, std::string("expected a positive integer ") + what + ", found '" + t.text + "'");
        }
        return v;
    }

    /// Parses "slot=<n>" into a 0-based slot index.
    std::size_t slot_ref(const Token &t) const {
        if (!t.text.starts_with("slot=")) {
            fail(t.col, "expected 'slot=<n>', found '" + t.text + "'");
        }
        Token n{t.text.substr(5), t.col + 5};
        return checked_slot(n);
    }

    std::size_t checked_slot(const Token &t) const {
        if (plan_.slots == 0) {
            fail(t.col, "'slots' must be declared first");
        }
        std::size_t s = parse_count(t, "slot number");
        if (s > plan_.slots) {
            fail(t.col, "slot " + std::to_string(s) + " out of range (plan has " + std::to_string(plan_.slots) +
                            " slots)");
        }
        return s - 1;
    }

    void handle_line(std::string_view raw, std::size_t line_no) {
        line_ = line_no;
        auto hash = raw.find('#');
        std::string_view line = raw.substr(0, hash);
        auto tokens = tokenize_line(line);
        if (tokens.empty()) {
            return;
        }
        const auto &d = tokens[0];
        if (d.text == "slots") {
            directive_slots(tokens);
        } else if (d.text == "slot") {
            directive_slot(tokens);
        } else if (d.text == "state") {
            directive_state(line, tokens);
        } else if (d.text == "stage") {
            directive_stage(tokens);
        } else if (d.text == "snapshot") {
            directive_snapshot(tokens);
        } else if (d.text == "detect") {
            directive_detect(tokens);
        } else {
            fail(d.col, "unknown directive '" + d.text + "'");
        }
    }

    void directive_slots(const std::vector<Token> &tokens) {
        if (plan_.slots != 0) {
            fail(tokens[0].col, "'slots' declared twice");
        }
        if (tokens.size() != 2) {
            fail(tokens[0].col, "usage: slots <n>");
        }
        plan_.slots = parse_count(tokens[1], "slot count");
        plan_.alphabets.assign(plan_.slots, {});
        declared_.assign(plan_.slots, false);
        current_.assign(plan_.slots, {});
    }

    void directive_slot(const std::vector<Token> &tokens) {
        if (tokens.size() < 4 || tokens[2].text != "modes") {
            fail(tokens[0].col, "usage: slot <n> modes <label>...");
        }
        std::size_t s = checked_slot(tokens[1]);
        if (declared_[s]) {
            fail(tokens[1].col, "modes of slot " + std::to_string(s + 1) + " declared twice");
        }
        if (!plan_.stages.empty()) {
            fail(tokens[0].col, "slot modes must be declared before the first stage");
        }
        std::vector<std::string> modes;
        for (std::size_t i = 3; i < tokens.size(); i++) {
            const auto &m = tokens[i];
            if (!valid_label(m.text)) {
                fail(m.col, "invalid mode label '" + m.text + "'");
            }
            if (std::find(modes.begin(), modes.end(), m.text) != modes.end()) {
                fail(m.col, "mode '" + m.text + "' listed twice");
            }
            modes.push_back(m.text);
        }
        declared_[s] = true;
        plan_.alphabets[s] = modes;
        current_[s] = std::move(modes);
    }

    void directive_state(std::string_view line, const std::vector<Token> &tokens) {
        if (state_line_ != 0) {
            fail(tokens[0].col, "'state' declared twice");
        }
        if (tokens.size() < 2) {
            fail(tokens[0].col, "usage: state <ket-expr>");
        }
        std::size_t col = tokens[1].col;
        std::string_view expr = line.substr(col - 1);
        plan_.state_text = std::string(expr);
        while (!plan_.state_text.empty() && (plan_.state_text.back() == ' ' || plan_.state_text.back() == '\t' ||
                                             plan_.state_text.back() == '\r')) {
            plan_.state_text.pop_back();
        }
        plan_.initial_state = parse_ket_at(expr, line_, col);
        state_line_ = line_;
        state_col_ = col;
    }

    std::map<std::string, Token> key_values(const std::vector<Token> &tokens, std::size_t from,
                                            const std::set<std::string> &allowed) const {
        std::map<std::string, Token> kv;
        for (std::size_t i = from; i < tokens.size(); i++) {
            const auto &t = tokens[i];
            auto eq = t.text.find('=');
            if (eq == std::string::npos || eq == 0) {
                fail(t.col, "expected key=value, found '" + t.text + "'");
            }
            std::string key = t.text.substr(0, eq);
            if (!allowed.contains(key)) {
                fail(t.col, "unknown key '" + key + "'");
            }
            if (kv.contains(key)) {
                fail(t.col, "key '" + key + "' given twice");
            }
            kv.emplace(key, Token{t.text.substr(eq + 1), t.col + eq + 1});
        }
        for (const auto &key : allowed) {
            if (!kv.contains(key)) {
                fail(tokens[0].col, "stage is missing '" + key + "='");
            }
        }
        return kv;
    }

    std::vector<std::string> mode_list(const Token &t, std::size_t n) const {
        auto parts = split(t.text, ',');
        if (parts.size() != n) {
            fail(t.col, "expected " + std::to_string(n) + " comma-separated modes, found '" + t.text + "'");
        }
        for (const auto &p : parts) {
            if (!valid_label(p)) {
                fail(t.col, "invalid mode label '" + p + "'");
            }
        }
        return parts;
    }

    void consume_modes(std::size_t slot, const std::vector<std::string> &in, const std::vector<std::string> &out,
                       std::size_t col) {
        auto &alpha = current_[slot];
        for (const auto &m : in) {
            if (std::find(alpha.begin(), alpha.end(), m) == alpha.end()) {
                fail(col, "stage consumes mode '" + m + "' which is not present on slot " + std::to_string(slot + 1));
            }
        }
        std::vector<std::string> next;
        for (const auto &m : alpha) {
            if (std::find(in.begin(), in.end(), m) == in.end()) {
                next.push_back(m);
            }
        }
        for (const auto &m : out) {
            if (std::find(next.begin(), next.end(), m) != next.end()) {
                fail(col, "stage output mode '" + m + "' already exists on slot " + std::to_string(slot + 1));
            }
            next.push_back(m);
        }
        alpha = std::move(next);
    }

    double parse_phi(const Token &t) const {
        std::string_view s = t.text;
        double sign = 1;
        if (s.starts_with('-')) {
            sign = -1;
            s.remove_prefix(1);
        }
        if (s.starts_with("pi")) {
            s.remove_prefix(2);
            double div = 1;
            if (s.starts_with('/')) {
                s.remove_prefix(1);
                auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), div);
                if (ec != std::errc() || ptr != s.data() + s.size() || div == 0 || !std::isfinite(div)) {
                    fail(t.col, "bad phase '" + t.text + "'");
                }
            } else if (!s.empty()) {
                fail(t.col, "bad phase '" + t.text + "'");
            }
            return sign * std::numbers::pi / div;
        }
        double v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
            fail(t.col, "bad phase '" + t.text + "'");
        }
        return sign * v;
    }

    void directive_stage(const std::vector<Token> &tokens) {
        if (tokens.size() < 3) {
            fail(tokens[0].col, "usage: stage slot=<n> <bs|phase|mirror|custom> key=value...");
        }
        std::size_t slot = slot_ref(tokens[1]);
        if (!declared_[slot]) {
            fail(tokens[1].col, "modes of slot " + std::to_string(slot + 1) + " are not declared");
        }
        const auto &kind = tokens[2];
        std::optional<ModeMap> map;
        try {
            if (kind.text == "bs") {
                auto kv = key_values(tokens, 3, {"kind", "in", "out"});
                const auto &k = kv.at("kind");
                BeamSplitterKind bk;
                if (k.text == "splitter") {
                    bk = BeamSplitterKind::splitter;
                } else if (k.text == "recombiner") {
                    bk = BeamSplitterKind::recombiner;
                } else {
                    fail(k.col, "unknown beam splitter kind '" + k.text + "'");
                }
                auto in = mode_list(kv.at("in"), 2);
                auto out = mode_list(kv.at("out"), 2);
                consume_modes(slot, in, out, kv.at("in").col);
                map = make_beam_splitter(bk, {in[0], in[1]}, {out[0], out[1]});
            } else if (kind.text == "phase") {
                auto kv = key_values(tokens, 3, {"mode", "phi"});
                auto mode = mode_list(kv.at("mode"), 1);
                double phi = parse_phi(kv.at("phi"));
                consume_modes(slot, mode, mode, kv.at("mode").col);
                map = make_phase(mode[0], phi);
            } else if (kind.text == "mirror") {
                auto kv = key_values(tokens, 3, {"in", "out"});
                auto in = mode_list(kv.at("in"), 1);
                auto out = mode_list(kv.at("out"), 1);
                consume_modes(slot, in, out, kv.at("in").col);
                map = make_mirror(in[0], out[0]);
            } else if (kind.text == "custom") {
                auto kv = key_values(tokens, 3, {"in", "out", "matrix"});
                auto in = split(kv.at("in").text, ',');
                auto in_modes = mode_list(kv.at("in"), in.size());
                auto out_modes = mode_list(kv.at("out"), in.size());
                const auto &m = kv.at("matrix");
                auto entries = split(m.text, ';');
                std::size_t n = in_modes.size();
                if (entries.size() != n * n) {
                    fail(m.col, "custom matrix needs " + std::to_string(n * n) + " ';'-separated entries");
                }
                std::vector<Amplitude> data;
                std::size_t col = m.col;
                for (const auto &e : entries) {
                    data.push_back(parse_entry(e, line_, col));
                    col += e.size() + 1;
                }
                consume_modes(slot, in_modes, out_modes, kv.at("in").col);
                try {
                    map = ModeMap(in_modes, out_modes, ModeMatrix(n, std::move(data)));
                } catch (const OpticsError &e) {
                    fail(m.col, std::string("custom matrix rejected: ") + e.what());
                }
            } else {
                fail(kind.col, "unknown stage type '" + kind.text + "'");
            }
        } catch (const OpticsError &e) {
            fail(kind.col, e.what());
        }
        plan_.stages.push_back({slot, std::move(*map), line_});
    }

    void directive_snapshot(const std::vector<Token> &tokens) {
        if (tokens.size() != 2) {
            fail(tokens[0].col, "usage: snapshot <name>");
        }
        const auto &name = tokens[1];
        if (name.text == "final") {
            fail(name.col, "snapshot name 'final' is reserved");
        }
        for (const auto &[n, idx] : plan_.snapshots) {
            if (n == name.text) {
                fail(name.col, "snapshot '" + name.text + "' declared twice");
            }
        }
        plan_.snapshots.emplace_back(name.text, plan_.stages.size());
    }

    void directive_detect(const std::vector<Token> &tokens) {
        if (tokens.size() < 3) {
            fail(tokens[0].col, "usage: detect slot=<n> <label>...");
        }
        std::size_t slot = slot_ref(tokens[1]);
        if (plan_.detectors.contains(slot)) {
            fail(tokens[1].col, "detectors of slot " + std::to_string(slot + 1) + " declared twice");
        }
        std::vector<std::string> modes;
        for (std::size_t i = 2; i < tokens.size(); i++) {
            if (!valid_label(tokens[i].text)) {
                fail(tokens[i].col, "invalid mode label '" + tokens[i].text + "'");
            }
            modes.push_back(tokens[i].text);
            detect_refs_.push_back({slot, tokens[i], line_});
        }
        plan_.detectors[slot] = std::move(modes);
    }

    void finish(std::size_t last_line) {
        line_ = last_line;
        if (plan_.slots == 0) {
            fail(1, "missing 'slots' directive");
        }
        for (std::size_t s = 0; s < plan_.slots; s++) {
            if (!declared_[s]) {
                fail(1, "missing 'slot " + std::to_string(s + 1) + " modes ...' directive");
            }
        }
        if (state_line_ == 0) {
            fail(1, "missing 'state' directive");
        }
        line_ = state_line_;
        const Ket &k = plan_.initial_state;
        if (k.slots() != plan_.slots) {
            fail(state_col_, "state has " + std::to_string(k.slots()) + " slots but the plan declares " +
                                 std::to_string(plan_.slots));
        }
        for (const auto &[label, amp] : k.terms()) {
            for (std::size_t s = 0; s < plan_.slots; s++) {
                const auto &alpha = plan_.alphabets[s];
                if (std::find(alpha.begin(), alpha.end(), label[s]) == alpha.end()) {
                    fail(state_col_, "state uses undeclared mode '" + label[s] + "' on slot " + std::to_string(s + 1));
                }
            }
        }
        for (const auto &ref : detect_refs_) {
            line_ = ref.line;
            const auto &alpha = current_[ref.slot];
            if (std::find(alpha.begin(), alpha.end(), ref.token.text) == alpha.end()) {
                fail(ref.token.col, "detector mode '" + ref.token.text + "' does not exist on slot " +
                                        std::to_string(ref.slot + 1) + " after the final stage");
            }
        }
    }

    struct DetectRef {
        std::size_t slot;
        Token token;
        std::size_t line;
    };

    std::string_view text_;
    std::size_t line_ = 0;
    BenchPlan plan_;
    std::vector<bool> declared_;
    std::vector<std::vector<std::string>> current_;
    std::size_t state_line_ = 0;
    std::size_t state_col_ = 0;
    std::vector<DetectRef> detect_refs_;
};

}  // namespace

BenchPlan parse_bench(std::string_view text) {
    return BenchParser(text).run();
}

std::vector<std::pair<std::string, Ket>> compile_and_run(const BenchPlan &plan) {
    std::vector<std::pair<std::string, Ket>> out;
    Ket k = plan.initial_state;
    std::size_t next_snapshot = 0;
    auto record = [&](std::size_t applied) {
        while (next_snapshot < plan.snapshots.size() && plan.snapshots[next_snapshot].second == applied) {
            out.emplace_back(plan.snapshots[next_snapshot].first, k);
            next_snapshot++;
        }
    };
    record(0);
    for (std::size_t i = 0; i < plan.stages.size(); i++) {
        k = apply_to_slot(k, plan.stages[i].slot, plan.stages[i].map);
        record(i + 1);
    }
    out.emplace_back("final", k);
    return out;
}

}  // namespace ontobench
