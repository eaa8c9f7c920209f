#include "overq/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "overq/enumeration.hpp"
#include "overq/harness.hpp"
#include "overq/qbinomial.hpp"
#include "overq/serialize.hpp"

namespace overq {

namespace {

enum class Format { Text, Json, Csv };

struct Options {
    Format format = Format::Text;
    std::optional<long long> budget;

    long long cell_budget() const
    {
        return budget.value_or(env_budget().value_or(kDefaultCellBudget));
    }
    long long weight_budget() const
    {
        return budget.value_or(env_budget().value_or(kDefaultWeightBudget));
    }
    static std::optional<long long> env_budget()
    {
        const char* v = std::getenv("OVERQ_BUDGET");
        if (!v || !*v) return std::nullopt;
        char* end = nullptr;
        long long n = std::strtoll(v, &end, 10);
        if (end == v || *end) return std::nullopt;
        return n;
    }
};

void print_qseries(const QSeries& s, Format fmt, std::ostream& out)
{
    switch (fmt) {
    case Format::Text:
        out << to_text(s) << "\n";
        break;
    case Format::Json:
        out << to_json(s).dump() << "\n";
        break;
    case Format::Csv:
        out << "exp,coeff\n";
        for (std::size_t e = 0; e <= s.trunc(); ++e)
            if (!s.coeff(e).is_zero()) out << e << "," << s.coeff(e) << "\n";
        break;
    }
}

void print_xqseries(const XQSeries& s, Format fmt, std::ostream& out)
{
    switch (fmt) {
    case Format::Text:
        out << to_text(s) << "\n";
        break;
    case Format::Json:
        out << to_json(s).dump() << "\n";
        break;
    case Format::Csv:
        out << "xexp,qexp,coeff\n";
        for (const auto& [m, v] : s.terms())
            if (!v.is_zero()) out << m.first << "," << m.second << "," << v << "\n";
        break;
    }
}

void print_listing(const std::vector<Overpartition>& items, Format fmt,
                   std::ostream& out)
{
    if (fmt == Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& op : items) {
            nlohmann::json j;
            j["parts"] = op.parts;
            j["overlined"] = nlohmann::json::array();
            for (bool b : op.overlined) j["overlined"].push_back(b);
            arr.push_back(std::move(j));
        }
        out << arr.dump() << "\n";
        return;
    }
    for (const auto& op : items) out << op.str() << "\n";
}

void print_report(const VerificationReport& rep, Format fmt, std::ostream& out)
{
    if (fmt == Format::Json) {
        out << to_json(rep).dump() << "\n";
        return;
    }
    out << rep.status() << " " << rep.identity << " (";
    bool first = true;
    for (const auto& [k, v] : rep.params) {
        if (!first) out << " ";
        out << k << "=" << v;
        first = false;
    }
    out << ") [" << rep.elapsed.count() << " ms]";
    if (rep.first_failure) {
        out << " first failure at x^" << rep.first_failure->x << " q^"
            << rep.first_failure->q << ": lhs=" << rep.first_failure->lhs
            << " rhs=" << rep.first_failure->rhs;
    }
    out << "\n";
    if (fmt == Format::Text)
        for (const auto& note : rep.notes) out << "  # " << note << "\n";
}

std::vector<int> parse_residues(const std::string& csv)
{
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

const std::map<std::string, std::vector<std::string>> kComputeRequired = {
    {"gaussian", {"M", "N"}},   {"qtrinomial", {"a", "b", "c"}},
    {"overq", {"M", "N"}},      {"overterm", {"M", "N", "k"}},
    {"overlimit", {"j"}},       {"rankgf", {"m"}},
    {"D", {"N"}},               {"C", {"N"}},
    {"S", {"N"}},               {"product", {"modulus"}},
};

int run_compute(const std::string& object, const Options& opt,
                const std::map<std::string, std::optional<long long>>& p,
                Method method, const std::string& residues_csv, bool inverted,
                std::ostream& out, std::ostream& err)
{
    auto required = kComputeRequired.find(object);
    if (required == kComputeRequired.end()) return 2;
    for (const std::string& name : required->second) {
        if (!p.at(name)) {
            err << "compute " << object << " requires --" << name << "\n";
            return 2;
        }
    }
    auto get = [&](const char* name) { return static_cast<int>(*p.at(name)); };
    auto getz = [&](const char* name) {
        long long fallback = std::string(name) == "T" ? 50 : 8;
        return static_cast<std::size_t>(p.at(name).value_or(fallback));
    };
    if (object == "gaussian") {
        print_qseries(gaussian(get("M"), get("N")), opt.format, out);
    } else if (object == "qtrinomial") {
        print_qseries(qtrinomial(get("a"), get("b"), get("c")), opt.format, out);
    } else if (object == "overq") {
        print_qseries(over_qbinomial(get("M"), get("N"), method), opt.format, out);
    } else if (object == "overterm") {
        print_qseries(over_term(get("M"), get("N"), get("k")), opt.format, out);
    } else if (object == "overlimit") {
        print_qseries(over_limit(get("j"), getz("T")), opt.format, out);
    } else if (object == "rankgf") {
        print_qseries(rank_gf(get("m"), getz("T")), opt.format, out);
    } else if (object == "D") {
        print_xqseries(D_series(get("N"), getz("X"), getz("T")), opt.format, out);
    } else if (object == "C") {
        print_xqseries(C_series(get("N"), getz("X"), getz("T")), opt.format, out);
    } else if (object == "S") {
        print_xqseries(sylvester_S(get("N"), getz("X"), getz("T")), opt.format, out);
    } else if (object == "product") {
        QSeries s = product_modular(parse_residues(residues_csv),
                                    get("modulus"), getz("T"));
        if (inverted) s = s.inverse();
        print_qseries(s, opt.format, out);
    } else {
        return 2;
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err)
{
    CLI::App app{"Exact arithmetic for over q-binomial coefficients and the "
                 "identities built from them"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::optional<long long> budget;
    app.add_option("--format", format_name, "Output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--budget", budget,
                   "Raise the enumeration guards (also: OVERQ_BUDGET)");

    // compute ---------------------------------------------------------------
    auto* compute = app.add_subcommand("compute", "Compute one object");
    compute->fallthrough();
    std::string object;
    compute->add_option("object", object,
                        "gaussian | qtrinomial | overq | overterm | overlimit "
                        "| rankgf | D | C | S | product")
        ->required();
    std::map<std::string, std::optional<long long>> cp;
    for (const char* name : {"M", "N", "j", "k", "m", "a", "b", "c", "modulus"})
        compute->add_option(std::string("--") + name, cp[name]);
    compute->add_option("--T", cp["T"], "q-truncation order (default 50)");
    compute->add_option("--X", cp["X"], "x-truncation order (default 8)");
    std::string residues_csv;
    compute->add_option("--residues", residues_csv, "Comma-separated residues");
    bool inverted = false;
    compute->add_flag("--inverted", inverted, "Invert the modular product");
    std::string method_name = "closed";
    compute->add_option("--method", method_name, "closed | rec1 | rec2")
        ->check(CLI::IsMember({"closed", "rec1", "rec2"}));

    // enum ------------------------------------------------------------------
    auto* enumerate = app.add_subcommand("enum", "Enumerate overpartitions");
    enumerate->fallthrough();
    std::string what;
    enumerate->add_option("what", what, "box | gap | congruence | regular4")
        ->required()
        ->check(CLI::IsMember({"box", "gap", "congruence", "regular4"}));
    std::optional<long long> eM, eN, eweight, en, enmax;
    enumerate->add_option("--M", eM);
    enumerate->add_option("--N", eN);
    enumerate->add_option("--weight", eweight, "Restrict a box listing to one weight");
    enumerate->add_option("--n", en, "List objects of this weight");
    enumerate->add_option("--nmax", enmax, "Emit a count table up to this weight");
    std::string counts_by;
    enumerate->add_option("--counts", counts_by,
                          "Box count table refined by: overline | parts")
        ->check(CLI::IsMember({"overline", "parts"}));

    // verify ----------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run identity verifications");
    verify->fallthrough();
    std::string suite;
    verify->add_option("suite", suite,
                       "overg | pascal | limit | parts | tau | sylvester | "
                       "rank | key | rr | all")
        ->required()
        ->check(CLI::IsMember({"overg", "pascal", "limit", "parts", "tau",
                               "sylvester", "rank", "key", "rr", "all"}));
    std::optional<long long> vM, vN, vT, vX, vnmax, vm, vj, vTpad;
    verify->add_option("--Mmax", vM);
    verify->add_option("--Nmax", vN);
    verify->add_option("--T", vT);
    verify->add_option("--X", vX);
    verify->add_option("--nmax", vnmax);
    verify->add_option("--mmax", vm);
    verify->add_option("--jmax", vj);
    verify->add_option("--Tpad", vTpad);
    std::optional<long long> vKeyN;
    verify->add_option("--N", vKeyN, "Single N for the key-theorem suite");

    std::vector<std::string> argv_like = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("overq");
        for (const auto& a : argv_like) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    Options opt;
    opt.budget = budget;
    if (format_name == "json") opt.format = Format::Json;
    if (format_name == "csv") opt.format = Format::Csv;

    try {
        if (compute->parsed()) {
            Method method = Method::ClosedSum;
            if (method_name == "rec1") method = Method::Recurrence1;
            if (method_name == "rec2") method = Method::Recurrence2;
            if (!kComputeRequired.count(object)) {
                err << "unknown compute object '" << object << "'\n";
                return 2;
            }
            return run_compute(object, opt, cp, method, residues_csv, inverted,
                               out, err);
        }

        if (enumerate->parsed()) {
            if (what == "box") {
                if (!eM || !eN) {
                    err << "enum box requires --M and --N\n";
                    return 2;
                }
                BoxShape box{static_cast<int>(*eM), static_cast<int>(*eN)};
                if (!counts_by.empty()) {
                    BoxRefinement r = counts_by == "overline"
                                          ? BoxRefinement::OverlineCount
                                          : BoxRefinement::PartCount;
                    box_count_table(box, r, opt.cell_budget()).write_csv(out);
                    return 0;
                }
                auto items = enum_overpartitions_box(
                    box,
                    eweight ? std::optional<int>(static_cast<int>(*eweight))
                            : std::nullopt,
                    opt.cell_budget());
                print_listing(items, opt.format, out);
                return 0;
            }
            if (enmax) {
                int nmax = static_cast<int>(*enmax);
                CountTable table = gap_congruence_counts(nmax, opt.weight_budget());
                if (what == "gap" || what == "congruence" || what == "regular4") {
                    std::size_t col = what == "gap" ? 0 : what == "congruence" ? 1 : 2;
                    CountTable single({"n"}, {what == "gap" ? "A"
                                              : what == "congruence" ? "B" : "C"});
                    for (const auto& [key, vals] : table.rows)
                        single.cell(key) = vals[col];
                    single.write_csv(out);
                    return 0;
                }
            }
            if (!en) {
                err << "enum " << what << " requires --n (listing) or --nmax (table)\n";
                return 2;
            }
            int n = static_cast<int>(*en);
            std::vector<Overpartition> items;
            if (what == "gap")
                items = enum_gap(n, opt.weight_budget());
            else if (what == "congruence")
                items = enum_congruence(n, opt.weight_budget());
            else
                items = enum_regular4(n, opt.weight_budget());
            print_listing(items, opt.format, out);
            return 0;
        }

        // verify
        std::vector<VerificationReport> reports;
        auto or_else = [](const std::optional<long long>& v, long long d) {
            return v.value_or(d);
        };
        if (suite == "overg" || suite == "all")
            reports.push_back(verify_overg(static_cast<int>(or_else(vM, 8)),
                                           static_cast<int>(or_else(vN, 8))));
        if (suite == "pascal" || suite == "all")
            reports.push_back(verify_pascal(static_cast<int>(or_else(vM, 12)),
                                            static_cast<int>(or_else(vN, 12))));
        if (suite == "limit" || suite == "all") {
            std::vector<int> js;
            for (int j = 0; j <= static_cast<int>(or_else(vj, 5)); ++j)
                js.push_back(j);
            reports.push_back(verify_limit(js, {15, 20, 25},
                                           static_cast<std::size_t>(or_else(vT, 50))));
        }
        if (suite == "parts" || suite == "all")
            reports.push_back(verify_parts_gf(
                static_cast<int>(or_else(vN, 8)),
                static_cast<std::size_t>(or_else(vX, 6)),
                static_cast<std::size_t>(or_else(vT, 30))));
        if (suite == "tau" || suite == "all")
            reports.push_back(
                verify_tau_congruence(static_cast<int>(or_else(vnmax, 200))));
        if (suite == "sylvester" || suite == "all")
            reports.push_back(verify_sylvester(
                static_cast<int>(or_else(vN, 10)),
                static_cast<std::size_t>(or_else(vX, 6)),
                static_cast<std::size_t>(or_else(vT, 40))));
        if (suite == "rank" || suite == "all")
            reports.push_back(verify_rank(static_cast<int>(or_else(vm, 5)),
                                          static_cast<std::size_t>(or_else(vT, 30)),
                                          static_cast<int>(or_else(vnmax, 30))));
        if (suite == "key" || suite == "all") {
            std::vector<int> Ns;
            if (vKeyN) {
                if (*vKeyN < 2) {
                    err << "verify key requires N >= 2\n";
                    return 2;
                }
                Ns.push_back(static_cast<int>(*vKeyN));
            } else {
                for (int N = 2; N <= static_cast<int>(or_else(vN, 10)); ++N)
                    Ns.push_back(N);
            }
            reports.push_back(verify_key_theorem(
                Ns, static_cast<std::size_t>(or_else(vX, 8)),
                static_cast<std::size_t>(or_else(vTpad, 20))));
        }
        if (suite == "rr" || suite == "all")
            reports.push_back(verify_rr(static_cast<int>(or_else(vnmax, 60)),
                                        static_cast<std::size_t>(or_else(vT, 60))));

        bool all_pass = true;
        for (const auto& rep : reports) {
            print_report(rep, opt.format, out);
            all_pass = all_pass && rep.pass;
        }
        return all_pass ? 0 : 1;
    } catch (const BudgetExceeded& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const OutOfRange& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    }
}

} // namespace overq
