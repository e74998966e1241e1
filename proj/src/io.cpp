#include "katz/io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace katz {

namespace {

// Recursive-descent parser over the entry grammar.
// expr   := term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := '-' factor | power
// power  := atom ('^' ['-'] integer)?
// atom   := integer | 'z' | '(' expr ')'
class EntryParser {
public:
    explicit EntryParser(const std::string& s) : s_(s) {}

    RationalFunction run() {
        RationalFunction r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RationalFunction expr() {
        RationalFunction r = term();
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    RationalFunction term() {
        RationalFunction r = factor();
        while (true) {
            if (eat('*')) {
                r *= factor();
            } else if (eat('/')) {
                RationalFunction d = factor();
                if (d.is_zero()) fail("division by zero");
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RationalFunction factor() {
        if (eat('-')) return -factor();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (!eat('^')) return base;
        long e = integer(true);
        if (e < 0) {
            if (base.is_zero()) fail("zero to a negative power");
            base = base.inv();
            e = -e;
        }
        RationalFunction r(Rat(1));
        for (long i = 0; i < e; ++i) r *= base;
        return r;
    }

    RationalFunction atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'z') {
            ++pos_;
            return RationalFunction::monomial(Rat(1), 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rat(integer(false)));
        fail("expected a number, 'z' or '('");
    }

    long integer(bool allow_sign) {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (allow_sign && pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v < 0) {
                pos_ = start;
                fail("integer literal too large");
            }
            ++pos_;
        }
        return neg ? -v : v;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

SystemMatrix build_system(const std::vector<std::vector<std::string>>& rows, SystemForm form) {
    std::size_t n = rows.size();
    if (n == 0) throw ParseError("empty matrix", 0);
    RfMatrix m(n, n);
    std::vector<std::string> errors;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            std::ostringstream os;
            os << "matrix is not square: row " << i + 1 << " has " << rows[i].size()
               << " entries, expected " << n;
            throw ParseError(os.str(), 0);
        }
        for (std::size_t j = 0; j < n; ++j) {
            try {
                m.at(i, j) = parse_entry(rows[i][j]);
            } catch (const ParseError& e) {
                std::ostringstream os;
                os << "entry (" << i + 1 << "," << j + 1 << ") at position " << e.position() << ": "
                   << e.what();
                errors.push_back(os.str());
            }
        }
    }
    if (!errors.empty()) {
        std::string all;
        for (const auto& e : errors) all += (all.empty() ? "" : "; ") + e;
        throw ParseError(all, 0);
    }
    return SystemMatrix(std::move(m), form);
}

SystemForm parse_form(const std::string& s) {
    if (s == "theta") return SystemForm::theta;
    if (s == "d/dz") return SystemForm::dz;
    throw ParseError("unknown form '" + s + "' (expected \"d/dz\" or \"theta\")", 0);
}

}  // namespace

RationalFunction parse_entry(const std::string& s) { return EntryParser(s).run(); }

SystemMatrix parse_document(const std::string& text) {
    // Decide JSON vs plain text by the first non-space character.
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
        }
        if (!doc.contains("matrix") || !doc["matrix"].is_array())
            throw ParseError("missing \"matrix\" array", 0);
        SystemForm form = SystemForm::dz;
        if (doc.contains("form")) form = parse_form(doc["form"].get<std::string>());
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : doc["matrix"]) {
            rows.emplace_back();
            for (const auto& cell : row) rows.back().push_back(cell.get<std::string>());
        }
        return build_system(rows, form);
    }

    // Plain text: optional "form: ..." first line, then ';'-separated rows.
    SystemForm form = SystemForm::dz;
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (first && line.rfind("form:", 0) == 0) {
            std::string f = line.substr(5);
            f.erase(0, f.find_first_not_of(" \t"));
            f.erase(f.find_last_not_of(" \t\r") + 1);
            form = parse_form(f);
            first = false;
            continue;
        }
        first = false;
        rows.emplace_back();
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ';')) rows.back().push_back(cell);
    }
    return build_system(rows, form);
}

std::string rat_str(const Rat& r) { return r.get_str(); }

std::string serialize_document(const SystemMatrix& s) {
    nlohmann::json doc;
    doc["form"] = "theta";
    auto rows = nlohmann::json::array();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 0; j < s.dim(); ++j) row.push_back(s.theta_matrix().at(i, j).str());
        rows.push_back(std::move(row));
    }
    doc["matrix"] = std::move(rows);
    return doc.dump(2);
}

std::string serialize_report(const RankReport& r) {
    nlohmann::json doc;
    doc["poincare_rank"] = r.poincare;
    doc["true_poincare_rank"] = r.true_poincare;
    doc["katz_rank"] = rat_str(r.katz);
    doc["n"] = r.n;
    doc["active_columns"] = r.m_active;
    auto ws = nlohmann::json::array();
    for (const auto& w : r.witnesses) ws.push_back({{"k", rat_str(w.k)}, {"equal", w.equal}});
    doc["witnesses"] = std::move(ws);
    return doc.dump(2);
}

}  // namespace katz
