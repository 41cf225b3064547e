/*
 * Copyright 2026 The Splythoff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: tables, words, verification, experiments, export
// and a small play mode.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <variant>

#include "splythoff/splythoff.hpp"

namespace sp = splythoff;
using json = nlohmann::ordered_json;

namespace {

enum Exit { ok = 0, verification_failed = 1, usage = 2 };

struct Globals {
    std::string format = "tsv";
    std::string out;
    unsigned threads = 1;
    std::size_t seed_cap = sp::default_scan_cap;
};

// Writes to --out if given, else stdout.
void emit(const Globals& g, const std::string& text)
{
    if (g.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw sp::resource_error("cannot open " + g.out);
    f << text;
}

sp::GameRules make_rules(const std::string& family, std::uint32_t a)
{
    if (family == "wythoff") return a == 1 ? sp::GameRules::wythoff() : sp::GameRules::a_wythoff(a);
    if (family == "splythoff") return a == 1 ? sp::GameRules::splythoff() : sp::GameRules::a_splythoff(a);
    throw sp::invalid_parameter("unknown game family '" + family + "'");
}

struct TableArgs {
    std::string kind;
    unsigned k = 3;
    std::uint32_t a = 1;
    std::int64_t b = 0;
    std::size_t n = 12;
    bool oracle = false;
};

sp::TextTable make_table(const TableArgs& args, const Globals& g)
{
    const std::string& kind = args.kind;
    if (kind == "positions")
        return (args.oracle ? sp::positions_table_oracle(args.k, args.n, g.seed_cap) : sp::positions_table(args.k, args.n)).text();
    if (kind == "diff") return sp::difference_table(args.k, args.n).text();
    if (kind == "ddiff") return sp::double_difference_table(args.k, args.n).text();
    if (kind == "quadribonacci") return sp::quadribonacci_columns(args.n).text();
    if (kind == "beatty") return sp::wythoff_ab_params(args.a, args.b == 0 ? args.a : args.b).rows(args.n).text();
    if (kind == "wythoff") {
        if (args.a == 1) return sp::wythoff_columns(args.n).text();
        auto ps = sp::p_positions(sp::GameRules::a_wythoff(args.a), args.n);
        return sp::pile_table(ps);
    }
    if (kind == "splythoff") {
        if (args.a == 1) return sp::splythoff_columns(args.n).text();
        return sp::step_code_table(sp::GameRules::a_splythoff(args.a), args.n);
    }
    throw sp::invalid_parameter("unknown table kind '" + kind + "'");
}

std::string render_table(const sp::TextTable& t, const std::string& format, const std::string& row)
{
    if (format == "tsv") return sp::to_tsv(t);
    if (format == "csv") return sp::to_csv(t);
    if (format == "bfile") return sp::to_bfile(row.empty() ? t.rows.front() : t.row(row));
    if (format == "json") {
        json j;
        if (!t.header.empty()) {
            j["header_name"] = t.header_name;
            j["header"] = t.header;
        }
        json rows = json::object();
        for (std::size_t i = 0; i < t.rows.size(); ++i) rows[t.names[i]] = t.rows[i];
        j["rows"] = rows;
        return j.dump() + "\n";
    }
    throw sp::invalid_parameter("unknown format '" + format + "'");
}

std::string params_text(const sp::VerificationReport& r)
{
    std::string s;
    for (const auto& [k, v] : r.params) s += (s.empty() ? "" : " ") + k + "=" + std::to_string(v);
    return s;
}

std::string render_report(const sp::VerificationReport& r, const std::string& format)
{
    if (format == "json") {
        json j;
        j["check"] = r.check;
        json p = json::object();
        for (const auto& [k, v] : r.params) p[k] = v;
        j["params"] = p;
        j["status"] = r.passed ? "pass" : "fail";
        if (!r.passed) {
            j["counterexample"] = r.counterexample;
            j["detail"] = r.detail;
        }
        j["seconds"] = r.seconds;
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << '\t' << r.check << '\t' << params_text(r) << '\t' << std::fixed
       << std::setprecision(3) << r.seconds << "s";
    if (!r.passed) os << '\t' << r.counterexample << '\t' << r.detail;
    os << '\n';
    return os.str();
}

struct VerifyArgs {
    std::string check = "all";
    std::optional<std::size_t> n;
    std::optional<unsigned> k;
    std::optional<std::uint64_t> upto;
    std::optional<std::uint32_t> bound;
    std::optional<std::uint32_t> size;
};

std::vector<sp::VerificationReport> run_checks(const VerifyArgs& v, const Globals& g)
{
    std::vector<sp::VerificationReport> out;
    const bool all = v.check == "all";
    auto want = [&](const char* name) { return all || v.check == name; };
    auto ks = [&](unsigned lo, unsigned hi) {
        std::vector<unsigned> r;
        if (v.k) r.push_back(*v.k);
        else
            for (unsigned k = lo; k <= hi; ++k) r.push_back(k);
        return r;
    };
    bool matched = false;
    if (want("three-way")) matched = true, out.push_back(sp::verify_three_way(v.n.value_or(1000)));
    if (want("coding")) matched = true, out.push_back(sp::verify_coding(v.n.value_or(100'000)));
    if (want("partitions")) {
        matched = true;
        for (unsigned k : ks(3, 6)) out.push_back(sp::verify_partitions(k, v.upto.value_or(100'000)));
    }
    if (want("k4-mex")) matched = true, out.push_back(sp::verify_k4_mex(v.n.value_or(10'000)));
    if (want("row-identity")) {
        matched = true;
        for (unsigned k : ks(3, 8)) out.push_back(sp::verify_row_identity(k, v.n.value_or(10'000)));
    }
    if (want("structure")) {
        matched = true;
        for (unsigned k : ks(3, 6)) out.push_back(sp::verify_structure(k, v.n.value_or(20'000)));
    }
    if (want("sg-table")) matched = true, out.push_back(sp::verify_sg_table());
    if (want("characterization")) matched = true, out.push_back(sp::verify_characterization(v.bound.value_or(300)));
    if (want("beatty")) matched = true, out.push_back(sp::verify_beatty(5, v.upto.value_or(100'000), 4, v.n.value_or(500)));
    if (want("sg-evidence")) matched = true, out.push_back(sp::verify_sg_evidence(v.size.value_or(512), 100, g.threads));
    if (want("experiments")) matched = true, out.push_back(sp::verify_experiments(v.n.value_or(501)));
    if (!matched) throw sp::invalid_parameter("unknown check '" + v.check + "'");
    return out;
}

std::string experiment_record(std::uint32_t a, std::size_t n, const std::vector<std::string>& candidates)
{
    sp::StepCode sc = sp::step_code(sp::GameRules::a_splythoff(a), n);
    json j;
    j["rules"] = sp::GameRules::a_splythoff(a).name();
    j["a"] = a;
    j["n"] = n;
    json alphabet = json::array();
    for (auto [x, y] : sc.alphabet) alphabet.push_back({x, y});
    j["alphabet"] = alphabet;
    // code index at which each step first occurs
    json growth = json::array();
    std::uint32_t seen = 0;
    for (std::size_t i = 0; i < sc.code.size(); ++i)
        if (sc.code[i] == seen) {
            growth.push_back(i + 1);
            ++seen;
        }
    j["first_occurrence"] = growth;
    if (sc.alphabet.size() <= sp::max_alphabet) j["code"] = sc.code_string();
    else j["code"] = sc.code;
    json tested = json::array();
    for (const std::string& spec : candidates) {
        sp::Substitution sub = sp::Substitution::parse(spec);
        sp::FixpointReport r = sp::check_substitution_fixpoint(sc.code, sub);
        tested.push_back({{"substitution", spec},
                          {"consistent_prefix", r.consistent_prefix_length},
                          {"code_length", r.word_length},
                          {"fully_consistent", r.fully_consistent()}});
    }
    j["candidates"] = tested;
    return j.dump() + "\n";
}

// ---------------------------------------------------------------------------
// play

struct Piles {
    std::uint32_t first;
    std::uint32_t second;
};

std::string show(Piles p) { return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")"; }

// Parses one human move; returns the resulting piles or an error message.
std::variant<Piles, std::string> parse_move(const std::string& line, Piles at)
{
    std::istringstream in(line);
    std::string verb;
    in >> verb;
    auto take = [&](std::uint32_t from, std::int64_t t) -> std::optional<std::uint32_t> {
        if (t < 1 || t > from) return std::nullopt;
        return static_cast<std::uint32_t>(from - t);
    };
    if (verb == "single") {
        std::int64_t pile = 0, t = 0;
        if (!(in >> pile >> t) || (pile != 1 && pile != 2)) return std::string("usage: single <pile 1|2> <count>");
        auto left = take(pile == 1 ? at.first : at.second, t);
        if (!left) return std::string("cannot take that many");
        return pile == 1 ? Piles{*left, at.second} : Piles{at.first, *left};
    }
    if (verb == "double" || verb == "split") {
        std::int64_t x = 0, y = 0, c = 0;
        if (!(in >> x >> y) || (verb == "split" && !(in >> c)))
            return std::string(verb == "double" ? "usage: double <x> <y>" : "usage: split <x> <y> <c>");
        auto l = take(at.first, x);
        auto r = take(at.second, y);
        if (!l || !r) return std::string("cannot take that many");
        if (verb == "double") return Piles{*l, *r};
        std::uint32_t rest = *l + *r;
        if (c < 1 || c >= rest) return std::string("split part must be between 1 and the remaining pile - 1");
        return Piles{static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(rest - c)};
    }
    return std::string("moves: single <pile> <t> | double <x> <y> | split <x> <y> <c> | quit");
}

int play(const sp::GameRules& rules, Piles start, bool engine_first, unsigned threads)
{
    const std::uint32_t size = std::max(start.first, start.second) + 1;
    const sp::SGGrid grid = sp::sprague_grundy_grid(rules, size, threads);
    Piles at = start;
    bool human = !engine_first;
    std::cout << rules.name() << " from " << show(at) << "\n";
    std::string line;
    while (true) {
        if (at.first == 0 && at.second == 0) {
            std::cout << (human ? "engine" : "you") << " took the last counter and won\n";
            return ok;
        }
        if (human) {
            std::cout << show(at) << " your move> " << std::flush;
            if (!std::getline(std::cin, line) || line == "quit") return ok;
            auto parsed = parse_move(line, at);
            if (auto* err = std::get_if<std::string>(&parsed)) {
                std::cout << *err << "\n";
                continue;
            }
            Piles next = std::get<Piles>(parsed);
            auto moves = sp::legal_moves(rules, sp::Position(at.first, at.second));
            if (!std::binary_search(moves.begin(), moves.end(), sp::Position(next.first, next.second))) {
                std::cout << "illegal: " << show(at) << " cannot move to " << show(next) << "\n";
                continue;
            }
            at = next;
        } else {
            auto moves = sp::legal_moves(rules, sp::Position(at.first, at.second));
            auto win = std::find_if(moves.begin(), moves.end(), [&](sp::Position p) { return grid.at(p) == 0; });
            sp::Position to;
            if (win != moves.end()) {
                to = *win;
            } else {
                std::cout << "engine: no winning move\n";
                to = moves.back();  // largest successor: removes little
            }
            at = {to.a, to.b};
            std::cout << "engine moves to " << show(at) << "\n";
        }
        human = !human;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Splythoff Nim and k-bonacci table toolkit"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"tsv", "csv", "bfile", "json"}));
    app.add_option("--out", g.out, "Write output to FILE");
    app.add_option("--threads", g.threads, "Worker threads for SG sweeps")->check(CLI::Range(1u, 256u));
    app.add_option("--seed-cap", g.seed_cap, "Letter scan limit for word oracles");

    // word
    auto* word = app.add_subcommand("word", "Print a prefix of a k-bonacci word");
    unsigned wk = 3;
    std::size_t wn = 20;
    std::optional<unsigned> wdelete;
    std::string wcoding, wsub;
    unsigned wseed = 0;
    word->add_option("--k", wk, "Alphabet size")->check(CLI::Range(2u, 16u));
    word->add_option("--n", wn, "Number of letters");
    word->add_option("--delete", wdelete, "Delete this letter after generation");
    word->add_option("--coding", wcoding, "Coding applied after generation, e.g. 0:0,1:1,2:");
    word->add_option("--substitution", wsub, "Use this substitution instead of theta_k, e.g. 0:01,1:2,2:01");
    word->add_option("--seed", wseed, "Seed letter for --substitution");

    // table
    auto* table = app.add_subcommand("table", "Print a table");
    TableArgs targs;
    std::string trow;
    table->add_option("kind", targs.kind, "positions|diff|ddiff|wythoff|splythoff|quadribonacci|beatty")
        ->required()
        ->check(CLI::IsMember({"positions", "diff", "ddiff", "wythoff", "splythoff", "quadribonacci", "beatty"}));
    table->add_option("--k", targs.k, "Alphabet size for word tables");
    table->add_option("--a", targs.a, "Game or Beatty parameter a")->check(CLI::PositiveNumber);
    table->add_option("--b", targs.b, "Beatty offset b (default a)");
    table->add_option("--n", targs.n, "Columns")->check(CLI::PositiveNumber);
    table->add_option("--row", trow, "Row for b-file output");
    table->add_flag("--oracle", targs.oracle, "Build the positions table by scanning the word");

    // verify
    auto* verify = app.add_subcommand("verify", "Run verification checks");
    VerifyArgs vargs;
    verify->add_option("check", vargs.check,
                       "all|three-way|coding|partitions|k4-mex|row-identity|structure|sg-table|characterization|beatty|"
                       "sg-evidence|experiments")
        ->transform(CLI::Transformer(std::map<std::string, std::string>{
            {"theorem1", "three-way"}, {"theorem4", "k4-mex"}, {"lemma18", "row-identity"}}));
    verify->add_option("--n", vargs.n, "Length parameter");
    verify->add_option("--k", vargs.k, "Alphabet size");
    verify->add_option("--upto", vargs.upto, "Range for partition checks");
    verify->add_option("--bound", vargs.bound, "Bound for the characterization check");
    verify->add_option("--size", vargs.size, "Board size for SG evidence");

    // experiment
    auto* experiment = app.add_subcommand("experiment", "a-Splythoff step codes as JSON lines");
    std::uint32_t ea = 2;
    std::size_t en = 500;
    std::vector<std::string> ecand;
    experiment->add_option("--a", ea, "Parameter a")->check(CLI::Range(2u, 1000u));
    experiment->add_option("--n", en, "Number of P-positions")->check(CLI::Range(2, 1'000'000));
    experiment->add_option("--candidate", ecand, "Substitution to test, e.g. 0:01,1:2,2:01");

    // export
    auto* exp = app.add_subcommand("export", "Export sequences or SG grids");
    exp->require_subcommand(1);
    auto* exp_row = exp->add_subcommand("row", "One table row as an OEIS b-file");
    TableArgs xargs;
    xargs.n = 1000;
    std::string xrow;
    exp_row->add_option("kind", xargs.kind, "Table kind")->required();
    exp_row->add_option("--row", xrow, "Row name")->required();
    exp_row->add_option("--k", xargs.k, "Alphabet size");
    exp_row->add_option("--a", xargs.a, "Parameter a");
    exp_row->add_option("--b", xargs.b, "Beatty offset b");
    exp_row->add_option("--n", xargs.n, "Terms")->check(CLI::PositiveNumber);
    auto* exp_sg = exp->add_subcommand("sg", "Sprague-Grundy grid as CSV or SGG1 binary");
    std::string family = "splythoff";
    std::uint32_t sa = 1, size = 18;
    bool printed = false, binary = false;
    exp_sg->add_option("--family", family, "wythoff|splythoff");
    exp_sg->add_option("--a", sa, "Parameter a")->check(CLI::PositiveNumber);
    exp_sg->add_option("--size", size, "Board size N")->check(CLI::PositiveNumber);
    exp_sg->add_flag("--printed-orientation", printed, "Largest second pile first");
    exp_sg->add_flag("--binary", binary, "Write the SGG1 binary dump");

    // play
    auto* playcmd = app.add_subcommand("play", "Play against the engine on stdin");
    std::string pfamily = "splythoff";
    std::uint32_t pa = 1;
    std::vector<std::uint32_t> start{4, 7};
    bool engine_first = false;
    playcmd->add_option("--family", pfamily, "wythoff|splythoff");
    playcmd->add_option("--a", pa, "Parameter a")->check(CLI::PositiveNumber);
    playcmd->add_option("--start", start, "Starting piles")->expected(2);
    playcmd->add_flag("--engine-first", engine_first, "Engine moves first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*word) {
            sp::Word w;
            if (!wsub.empty()) w = sp::fixed_point_prefix(sp::Substitution::parse(wsub), static_cast<sp::Letter>(wseed), wn);
            else w = sp::fixed_point_prefix(sp::kbonacci_substitution(wk), 0, wn);
            const std::size_t alphabet = wsub.empty() ? wk : sp::Substitution::parse(wsub).alphabet_size();
            if (wdelete && !wcoding.empty()) throw sp::invalid_parameter("use either --delete or --coding");
            if (wdelete) w = sp::apply_coding(sp::Coding::deletion(alphabet, static_cast<sp::Letter>(*wdelete)), w);
            if (!wcoding.empty()) w = sp::apply_coding(sp::Coding::parse(wcoding), w);
            emit(g, sp::to_string(w) + "\n");
        } else if (*table) {
            emit(g, render_table(make_table(targs, g), g.format, trow));
        } else if (*verify) {
            bool passed = true;
            std::string text;
            for (const auto& r : run_checks(vargs, g)) {
                passed = passed && r.passed;
                text += render_report(r, g.format);
            }
            emit(g, text);
            return passed ? ok : verification_failed;
        } else if (*experiment) {
            std::vector<std::string> candidates{"0:01,1:02,2:0", "0:01,1:2,2:01"};
            for (const auto& c : ecand)
                if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(c);
            emit(g, experiment_record(ea, en, candidates));
        } else if (*exp) {
            if (*exp_row) {
                emit(g, sp::to_bfile(make_table(xargs, g).row(xrow)));
            } else {
                sp::SGGrid grid = sp::sprague_grundy_grid(make_rules(family, sa), size, g.threads);
                emit(g, binary ? sp::sg_to_binary(grid) : sp::sg_to_csv(grid, printed));
            }
        } else if (*playcmd) {
            return play(make_rules(pfamily, pa), {start[0], start[1]}, engine_first, g.threads);
        }
    } catch (const sp::invalid_parameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return verification_failed;
    }
    return ok;
}
