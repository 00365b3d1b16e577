#include "mbs/text_format.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace mbs {

namespace {

struct Token {
    std::string_view text;
    std::size_t column = 0;  // 1-based
};

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
}

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

class Builder {
public:
    explicit Builder(std::string name) : name_(std::move(name)) {}

    std::size_t line = 0;

    [[noreturn]] void fail(ErrorCode code, const Token& at, const std::string& message) const {
        throw ParseError(code, message, line, at.column);
    }

    void add_branch(const Token& id) {
        if (!branch_ids_.insert(std::string(id.text)).second)
            fail(ErrorCode::SemanticError, id, "DuplicateIdentifier: branch '" + std::string(id.text) + "'");
        branches_.emplace_back(std::string(id.text));
    }

    void add_sector(const Token& id, int genus, bool orientable) {
        if (sector_index_.contains(std::string(id.text)))
            fail(ErrorCode::SemanticError, id, "DuplicateIdentifier: sector '" + std::string(id.text) + "'");
        sector_index_.emplace(std::string(id.text), sectors_.size());
        sectors_.push_back({SectorId(std::string(id.text)), genus, orientable, {}});
    }

    void add_prebranch(const Token& sector, const Token& branch, const Token& degree, std::int64_t od) {
        const auto it = sector_index_.find(std::string(sector.text));
        if (it == sector_index_.end())
            fail(ErrorCode::SemanticError, sector, "UnknownSector: '" + std::string(sector.text) + "'");
        if (!branch_ids_.contains(std::string(branch.text)))
            fail(ErrorCode::SemanticError, branch, "UnknownBranch: '" + std::string(branch.text) + "'");
        if (od == 0) fail(ErrorCode::SemanticError, degree, "ZeroDegree: oriented degree must be nonzero");
        sectors_[it->second].prebranches.push_back({BranchId(std::string(branch.text)), od});
    }

    MultibranchedSurface finish() const {
        MultibranchedSurface surface(branches_, sectors_, name_);
        try {
            return validate(surface, false);
        } catch (const Error& e) {
            throw ParseError(ErrorCode::SemanticError,
                             std::string(error_code_name(e.code())) + ": " + e.what(), line, 1);
        }
    }

private:
    std::string name_;
    std::vector<BranchId> branches_;
    std::vector<Sector> sectors_;
    std::unordered_set<std::string> branch_ids_;
    std::unordered_map<std::string, std::size_t> sector_index_;
};

template <class T>
std::optional<T> to_number(std::string_view s) {
    T value{};
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

std::vector<MultibranchedSurface> parse_document(std::string_view text) {
    std::vector<MultibranchedSurface> out;
    std::optional<Builder> current;
    std::size_t line_number = 0;

    auto syntax = [&](const Token& at, const std::string& message) {
        throw ParseError(ErrorCode::SyntaxError, message, line_number, at.column);
    };
    auto expect_count = [&](const std::vector<Token>& t, std::size_t lo, std::size_t hi) {
        if (t.size() < lo) syntax(t.back(), "too few fields for '" + std::string(t[0].text) + "'");
        if (t.size() > hi) syntax(t[hi], "unexpected '" + std::string(t[hi].text) + "'");
    };
    auto identifier = [&](const Token& t) {
        if (!is_identifier(t.text)) syntax(t, "invalid identifier '" + std::string(t.text) + "'");
        return t;
    };

    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        start = end + 1;
        ++line_number;

        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }
        const auto keyword = tokens[0].text;
        if (keyword == "mbs") {
            expect_count(tokens, 2, 2);
            if (current) out.push_back(current->finish());
            current.emplace(std::string(identifier(tokens[1]).text));
            current->line = line_number;
            continue;
        }
        if (!current) current.emplace(std::string("unnamed"));
        current->line = line_number;
        if (keyword == "branch") {
            expect_count(tokens, 2, 2);
            current->add_branch(identifier(tokens[1]));
        } else if (keyword == "sector") {
            expect_count(tokens, 4, 5);
            identifier(tokens[1]);
            if (tokens[2].text != "genus") syntax(tokens[2], "expected 'genus'");
            const auto genus = to_number<int>(tokens[3].text);
            if (!genus) syntax(tokens[3], "genus must be an integer");
            if (*genus < 0)
                throw ParseError(ErrorCode::SemanticError, "NegativeGenus: genus must be non-negative",
                                 line_number, tokens[3].column);
            bool orientable = true;
            if (tokens.size() == 5) {
                if (tokens[4].text != "nonorientable") syntax(tokens[4], "expected 'nonorientable'");
                orientable = false;
            }
            current->add_sector(tokens[1], *genus, orientable);
        } else if (keyword == "prebranch") {
            expect_count(tokens, 4, 4);
            const auto od = to_number<std::int64_t>(tokens[3].text);
            if (!od) syntax(tokens[3], "oriented degree must be an integer");
            current->add_prebranch(identifier(tokens[1]), identifier(tokens[2]), tokens[3], *od);
        } else {
            syntax(tokens[0], "unknown keyword '" + std::string(keyword) + "'");
        }
        if (end == text.size()) break;
    }
    if (current) {
        current->line = line_number;
        out.push_back(current->finish());
    }
    return out;
}

MultibranchedSurface parse_surface(std::string_view text) {
    auto all = parse_document(text);
    if (all.size() != 1)
        throw ParseError(ErrorCode::SemanticError,
                         "expected one surface, found " + std::to_string(all.size()), 1, 1);
    return std::move(all.front());
}

std::string serialize(const MultibranchedSurface& surface) {
    std::ostringstream out;
    out << "mbs " << (surface.name().empty() ? "unnamed" : surface.name()) << '\n';
    for (const auto& b : surface.branches()) out << "branch " << b.value << '\n';
    for (const auto& s : surface.sectors()) {
        out << "sector " << s.id.value << " genus " << s.genus;
        if (!s.orientable) out << " nonorientable";
        out << '\n';
    }
    for (const auto& s : surface.sectors())
        for (const auto& pb : s.prebranches)
            out << "prebranch " << s.id.value << ' ' << pb.branch.value << ' ' << pb.oriented_degree << '\n';
    return out.str();
}

std::string serialize(const std::vector<MultibranchedSurface>& surfaces) {
    std::string out;
    for (std::size_t i = 0; i < surfaces.size(); ++i) {
        if (i) out += '\n';
        out += serialize(surfaces[i]);
    }
    return out;
}

}  // namespace mbs
