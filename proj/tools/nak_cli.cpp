// nak: command-line front end for the A(Q,C,s) toolkit.
//
//   nak_cli check FILE
//   nak_cli nakayama FILE --which A|dual|T1|T2
//   nak_cli hilbert FILE --algebra A|dual|T1|T2 --max-degree M
//   nak_cli verify FILE --suite automorphism|normal|lemmas|frobenius|hilbert|all [--max-degree D]
//   nak_cli examples list | emit NAME
//
// JSON goes to stdout, a short summary to stderr (suppressed by --json).
// Exit status: 0 success, 1 condition or verification failure, 2 parse/IO error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nak/nak.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct Options {
    std::string file;
    std::string which = "A";
    std::string algebra = "A";
    std::string suite = "all";
    std::size_t max_degree = 0;
    bool json_only = false;
    std::string examples_action;
    std::string example_name;
};

const std::map<std::string, nak::AlgebraTag> kAlgebras{
    {"A", nak::AlgebraTag::A}, {"dual", nak::AlgebraTag::Dual}, {"T1", nak::AlgebraTag::T1}, {"T2", nak::AlgebraTag::T2}};

const std::map<std::string, nak::Suite> kSuites{{"automorphism", nak::Suite::Automorphism},
                                                {"normal", nak::Suite::Normal},
                                                {"lemmas", nak::Suite::Lemmas},
                                                {"frobenius", nak::Suite::Frobenius},
                                                {"hilbert", nak::Suite::Hilbert},
                                                {"all", nak::Suite::All}};

nak::Fixture load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return nak::parse_fixture(ss.str());
}

void emit(const nak::Json& j) { std::cout << j.dump(2) << "\n"; }

class Reporter {
public:
    explicit Reporter(bool quiet) : quiet_(quiet) {}
    template <class... Args>
    void operator()(const Args&... args) const {
        if (quiet_) return;
        (std::cerr << ... << args);
        std::cerr << "\n";
    }

private:
    bool quiet_;
};

void summarize_conditions(const Reporter& say, const nak::ConditionReport& r) {
    for (const auto& e : r.conditions)
        if (!e.holds) say("condition ", e.id, " fails");
    say(r.all_hold() ? "all conditions hold" : "conditions violated");
}

int conditions_failed(const Reporter& say, const nak::ConditionsFailed& e) {
    emit(nak::Json{{"conditions", nak::condition_report_json(e.report())}});
    summarize_conditions(say, e.report());
    return kFailed;
}

int cmd_check(const Options& o, const Reporter& say) {
    const nak::Fixture f = load(o.file);
    const nak::ConditionReport r = nak::check_conditions(f.params);
    emit(nak::condition_report_json(r));
    summarize_conditions(say, r);
    return r.all_hold() ? kOk : kFailed;
}

int cmd_nakayama(const Options& o, const Reporter& say) {
    const nak::Fixture f = load(o.file);
    nak::LinearGeneratorMap m;
    switch (kAlgebras.at(o.which)) {
    case nak::AlgebraTag::A: m = nak::nakayama_A(f.params); break;
    case nak::AlgebraTag::Dual: m = nak::nakayama_dual(f.params); break;
    case nak::AlgebraTag::T1: m = nak::nakayama_T1(f.params); break;
    default: m = nak::nakayama_T2(f.params); break;
    }
    emit(nak::map_json(m));
    say("Nakayama automorphism of ", o.which, ": ", nak::format_matrix(m.matrix));
    if (f.expected && o.which == "A") {
        const bool match = *f.expected == m.matrix;
        say(match ? "matches" : "DIFFERS FROM", " the expected matrix recorded in the fixture");
        if (!match) return kFailed;
    }
    return kOk;
}

int cmd_hilbert(const Options& o, const Reporter& say) {
    const nak::Fixture f = load(o.file);
    const nak::AlgebraTag tag = kAlgebras.at(o.algebra);
    const std::size_t top = o.max_degree == 0 ? 5 : o.max_degree;
    const nak::RewriteSystem rs = nak::complete(nak::build_presentation(f.params, tag), top + 1);
    const nak::HilbertFunction h = nak::hilbert(rs);
    emit(nak::hilbert_json(h));
    std::string dims;
    for (auto d : h.dims) dims += " " + std::to_string(d);
    say("dims of ", o.algebra, " in degrees 0..", top, ":", dims);
    return kOk;
}

int cmd_verify(const Options& o, const Reporter& say) {
    const nak::Fixture f = load(o.file);
    const std::size_t truncation = o.max_degree == 0 ? nak::default_truncation(f.params.n) : o.max_degree;
    nak::Workbench wb(f.params, truncation);
    const nak::VerificationReport r = nak::run_suite(wb, kSuites.at(o.suite));
    emit(nak::Json{{"suite", o.suite},
                   {"truncation", truncation},
                   {"all_pass", r.all_pass()},
                   {"items", nak::verification_json(r)}});
    std::size_t passed = 0;
    for (const auto& it : r.items) {
        if (it.pass)
            ++passed;
        else
            say("FAIL ", it.id, it.detail.empty() ? "" : ": ", it.detail);
    }
    say(passed, "/", r.items.size(), " items pass");
    return r.all_pass() ? kOk : kFailed;
}

int cmd_examples(const Options& o, const Reporter& say) {
    if (o.examples_action == "list") {
        nak::Json names = nak::Json::array();
        for (const auto& f : nak::fixtures::all()) names.push_back(f.name);
        emit(names);
        return kOk;
    }
    if (o.example_name.empty()) {
        say("examples emit needs a fixture name");
        return kInputError;
    }
    const auto f = nak::fixtures::by_name(o.example_name);
    if (!f) {
        say("unknown example ", o.example_name);
        return kInputError;
    }
    emit(nak::fixture_json(*f));
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graded algebras A(Q,C,s): conditions, Nakayama automorphisms, verification"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json_only, "Suppress the human-readable summary on stderr");

    auto algebra_check = CLI::IsMember({"A", "dual", "T1", "T2"});

    auto* check = app.add_subcommand("check", "Check the admissibility conditions");
    check->add_option("file", o.file, "Fixture JSON")->required();

    auto* nakayama = app.add_subcommand("nakayama", "Closed-form Nakayama automorphism");
    nakayama->add_option("file", o.file, "Fixture JSON")->required();
    nakayama->add_option("--which", o.which, "A, dual, T1 or T2")->check(algebra_check);

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function via the truncated rewrite system");
    hilbert->add_option("file", o.file, "Fixture JSON")->required();
    hilbert->add_option("--algebra", o.algebra, "A, dual, T1 or T2")->check(algebra_check);
    hilbert->add_option("--max-degree", o.max_degree, "Highest degree reported (default 5)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("file", o.file, "Fixture JSON")->required();
    verify->add_option("--suite", o.suite, "automorphism, normal, lemmas, frobenius, hilbert or all")
        ->check(CLI::IsMember({"automorphism", "normal", "lemmas", "frobenius", "hilbert", "all"}));
    verify->add_option("--max-degree", o.max_degree, "Truncation degree of the rewrite systems");

    auto* examples = app.add_subcommand("examples", "Bundled example fixtures");
    examples->add_option("action", o.examples_action, "list or emit")->required()->check(CLI::IsMember({"list", "emit"}));
    examples->add_option("name", o.example_name, "Fixture name for emit");

    for (auto* sub : {check, nakayama, hilbert, verify, examples}) sub->add_flag("--json", o.json_only, "Suppress the summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    const Reporter say(o.json_only);
    try {
        if (*check) return cmd_check(o, say);
        if (*nakayama) return cmd_nakayama(o, say);
        if (*hilbert) return cmd_hilbert(o, say);
        if (*verify) return cmd_verify(o, say);
        if (*examples) return cmd_examples(o, say);
    } catch (const nak::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const nak::ConditionsFailed& e) {
        return conditions_failed(say, e);
    } catch (const nak::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kInputError;
}
