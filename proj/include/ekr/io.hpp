#pragma once

// Text formats: .fam families, profile / split / verification CSV, JSON reports.

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ekr/counting.hpp"
#include "ekr/exactmath.hpp"
#include "ekr/family.hpp"
#include "ekr/probability.hpp"
#include "ekr/search.hpp"

namespace ekr {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

inline long long parse_int(const std::string& tok, std::size_t line) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) throw ParseError(line, "'" + tok + "' is not an integer");
    return v;
}

}  // namespace detail

/// Reads the .fam format: a header line `n k m`, then m lines of k increasing integers.
inline SetFamily read_family(std::istream& in) {
    std::string text;
    std::size_t line_no = 0;
    if (!std::getline(in, text)) throw ParseError(1, "empty input, expected header 'n k m'");
    ++line_no;
    const auto head = detail::split_ws(text);
    if (head.size() != 3) throw ParseError(line_no, "header must be 'n k m'");
    const long long n = detail::parse_int(head[0], line_no);
    const long long k = detail::parse_int(head[1], line_no);
    const long long m = detail::parse_int(head[2], line_no);
    if (n < 1 || n > kMaxGround) throw ParseError(line_no, "n must lie in [1,64]");
    if (k < 1 || k > n) throw ParseError(line_no, "k must lie in [1,n]");
    if (m < 0 || static_cast<unsigned long long>(m) > small_binom(static_cast<int>(n), static_cast<int>(k)))
        throw ParseError(line_no, "m must lie in [0, binom(n,k)]");

    std::vector<KSet> sets;
    std::set<std::uint64_t> seen;
    sets.reserve(static_cast<std::size_t>(m));
    while (static_cast<long long>(sets.size()) < m) {
        if (!std::getline(in, text))
            throw ParseError(line_no + 1, "expected " + std::to_string(m) + " members, found " +
                                              std::to_string(sets.size()));
        ++line_no;
        const auto tok = detail::split_ws(text);
        if (tok.size() != static_cast<std::size_t>(k))
            throw ParseError(line_no, "expected " + std::to_string(k) + " elements, found " + std::to_string(tok.size()));
        KSet s;
        long long prev = 0;
        for (const auto& t : tok) {
            const long long e = detail::parse_int(t, line_no);
            if (e < 1 || e > n) throw ParseError(line_no, "element " + t + " outside [1," + std::to_string(n) + "]");
            if (e <= prev) throw ParseError(line_no, "elements must be strictly increasing");
            prev = e;
            s = s.with(static_cast<int>(e));
        }
        if (!seen.insert(s.bits).second) throw ParseError(line_no, "duplicate member");
        sets.push_back(s);
    }
    while (std::getline(in, text)) {
        ++line_no;
        if (!detail::split_ws(text).empty()) throw ParseError(line_no, "unexpected content after the last member");
    }
    return SetFamily(static_cast<int>(n), static_cast<int>(k), std::move(sets));
}

inline SetFamily read_family(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return read_family(in);
}

inline SetFamily parse_family(const std::string& text) {
    std::istringstream in(text);
    return read_family(in);
}

inline void write_family(std::ostream& out, const SetFamily& f) {
    out << f.n() << ' ' << f.k() << ' ' << f.size() << '\n';
    for (KSet s : f) {
        bool first = true;
        for (int e : s.elements()) {
            out << (first ? "" : " ") << e;
            first = false;
        }
        out << '\n';
    }
}

inline std::string format_family(const SetFamily& f) {
    std::ostringstream out;
    write_family(out, f);
    return out.str();
}

inline void write_profile_csv(std::ostream& out, const InterProfile& p) {
    out << "t,count\n";
    for (std::size_t t = 0; t < p.counts.size(); ++t) out << t << ',' << p.counts[t] << '\n';
}

inline void write_split_csv(std::ostream& out, const ProfileSplit& s) {
    out << "t,trivial,nontrivial\n";
    for (std::size_t t = 0; t < s.trivial.size(); ++t)
        out << t << ',' << s.trivial[t] << ',' << s.nontrivial[t] << '\n';
}

inline void write_verification_csv(std::ostream& out, const VerificationTable& table) {
    out << "m,t,max,lex,colex,lex_optimal,colex_optimal\n";
    for (const auto& r : table.rows)
        out << r.m << ',' << r.t << ',' << r.best << ',' << r.lex << ',' << r.colex << ','
            << (r.lex_optimal ? "true" : "false") << ',' << (r.colex_optimal ? "true" : "false") << '\n';
}

inline nlohmann::json mc_json(const McEstimate& e) {
    return {{"samples", e.samples}, {"hits", e.hits},       {"estimate", e.estimate},
            {"ci_low", e.ci_low},   {"ci_high", e.ci_high}, {"seed", e.seed}};
}

/// {"p": "a/b", "exact": "c/d", "float": x, "mc": {...} or null}
inline nlohmann::json prob_json(const ExactRatio& p, const ExactRatio& exact, long double approx,
                                const McEstimate* mc = nullptr) {
    nlohmann::json j;
    j["p"] = to_string(p);
    j["exact"] = to_string(exact);
    j["float"] = static_cast<double>(approx);
    j["mc"] = mc ? mc_json(*mc) : nlohmann::json(nullptr);
    return j;
}

/// Wall time is left out unless asked for, so repeated runs print identical reports.
inline nlohmann::json report_json(const SearchReport& r, bool include_timing = false) {
    nlohmann::json j;
    j["objective"] = r.objective;
    j["sense"] = r.maximize ? "max" : "min";
    j["n"] = r.n;
    j["k"] = r.k;
    j["m"] = r.m;
    j["best_value"] = to_string(r.best_value);
    j["lex_value"] = to_string(r.lex_value);
    j["colex_value"] = to_string(r.colex_value);
    j["maximizer_count"] = r.maximizer_count;
    j["families_examined"] = r.families_examined;
    j["pruning"] = r.pruning;
    if (include_timing) j["wall_time_seconds"] = r.wall_time_seconds;
    auto list = nlohmann::json::array();
    for (const auto& f : r.maximizers) list.push_back(format_family(f));
    j["maximizers"] = list;
    return j;
}

}  // namespace ekr
