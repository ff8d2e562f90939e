#include "regzeta/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "regzeta/error.hpp"
#include "regzeta/json_io.hpp"
#include "regzeta/oracle.hpp"
#include "regzeta/zeta.hpp"

namespace regzeta {

namespace {

std::pair<uint64_t, uint64_t> factor_prime_power(uint64_t q) {
    if (q < 2) fail(Errc::NotPrime, "field size " + std::to_string(q) + " is not a prime power");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    uint64_t rest = q, k = 0;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1)
        fail(Errc::NotPrime, "field size " + std::to_string(q) + " is not a prime power");
    return {p, k};
}

struct FieldArgs {
    int64_t p = 0;
    int64_t k = 1;
    int64_t q = 0;

    std::pair<uint64_t, uint64_t> resolve() const {
        if (q > 0) return factor_prime_power(static_cast<uint64_t>(q));
        return {static_cast<uint64_t>(p), static_cast<uint64_t>(k)};
    }
};

struct OutputArgs {
    std::string format = "text";
    std::string out_path;

    void emit(DocKind kind, const Json& doc) const {
        std::string payload = format == "json"  ? render_json(doc)
                              : format == "csv" ? render_csv(kind, doc)
                                                : render_text(kind, doc);
        if (out_path.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) fail(Errc::Internal, "cannot open output file " + out_path);
            f << payload;
        }
    }
};

void add_field_options(CLI::App* sub, FieldArgs& fa) {
    auto* grp = sub->add_option_group("field", "finite field selection");
    auto* po = grp->add_option("--p", fa.p, "odd field characteristic")->check(CLI::PositiveNumber);
    auto* qo = grp->add_option("--q", fa.q, "odd prime-power field size (alternative to --p/--k)")
                   ->check(CLI::PositiveNumber);
    grp->require_option(1);
    auto* ko = sub->add_option("--k", fa.k, "field extension degree (with --p)")
                   ->check(CLI::Range(int64_t{1}, int64_t{20}))
                   ->default_val(int64_t{1});
    ko->excludes(qo);
    (void)po;
}

void add_output_options(CLI::App* sub, OutputArgs& oa) {
    sub->add_option("--format", oa.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");
    sub->add_option("--out", oa.out_path, "write output to this file instead of stdout");
}

/* Shared hypothesis gate: the even-rank orthogonal results need q > 3, and
   everything needs odd q; checked here so the rejection happens before any
   heavy computation. */
GroupKind make_kind(const std::string& group, int n, uint64_t p, uint64_t k) {
    GroupKind kind = GroupKind::parse(group, n);
    if (kind.fam == Family::SOeven) {
        uint64_t q = 1;
        for (uint64_t i = 0; i < k; ++i) q *= p;
        if (q <= 3)
            fail(Errc::SmallFieldUnsupported,
                 "so_2n^eps requires a field with more than 3 elements (got q = " +
                     std::to_string(q) + ")");
    }
    return kind;
}

int code_for(const Error& e) {
    switch (e.code()) {
        case Errc::SmallFieldUnsupported:
        case Errc::NotOdd:
            return 2;
        case Errc::CapExceeded:
            return 3;
        default:
            return 1;
    }
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{
        "exact tables of regular adjoint orbits and regular representation zeta data for "
        "sp_2n, so_{2n+1} and so_2n^(+-) over odd finite fields"};
    app.require_subcommand(1);

    const std::vector<std::string> groups = {"sp", "so-odd", "so-even-plus", "so-even-minus"};

    // types
    auto* t_cmd = app.add_subcommand("types", "list the type set X_n with mass and core columns");
    int64_t t_n = 0;
    int64_t t_q = 0;
    t_cmd->add_option("--n", t_n, "rank")->required()->check(CLI::PositiveNumber);
    t_cmd->add_option("--q", t_q, "odd prime-power field size for numeric columns")
        ->check(CLI::PositiveNumber);
    OutputArgs t_out;
    add_output_options(t_cmd, t_out);

    // orbits
    auto* o_cmd = app.add_subcommand("orbits", "regular adjoint orbit families of one group");
    std::string o_group;
    int64_t o_n = 0;
    FieldArgs o_field;
    OutputArgs o_out;
    o_cmd->add_option("--group", o_group, "group family")->required()->check(CLI::IsMember(groups));
    o_cmd->add_option("--n", o_n, "rank")->required()->check(CLI::PositiveNumber);
    add_field_options(o_cmd, o_field);
    add_output_options(o_cmd, o_out);

    // zeta
    auto* z_cmd = app.add_subcommand("zeta", "regular representation zeta data and degree ledger");
    std::string z_group;
    int64_t z_n = 0;
    int64_t z_levels = 1;
    FieldArgs z_field;
    OutputArgs z_out;
    z_cmd->add_option("--group", z_group, "group family")->required()->check(CLI::IsMember(groups));
    z_cmd->add_option("--n", z_n, "rank")->required()->check(CLI::PositiveNumber);
    z_cmd->add_option("--levels", z_levels, "expand the degree ledger through this level")
        ->check(CLI::Range(int64_t{1}, int64_t{64}))
        ->default_val(int64_t{1});
    add_field_options(z_cmd, z_field);
    add_output_options(z_cmd, z_out);

    // verify
    auto* v_cmd = app.add_subcommand(
        "verify", "brute-force matrix verification of the orbit tables (exit 0 iff empty diff)");
    std::string v_group;
    int64_t v_n = 0;
    FieldArgs v_field;
    OutputArgs v_out;
    uint64_t v_scan = OracleBudget{}.scan_limit;
    uint64_t v_closure = OracleBudget{}.group_limit;
    v_cmd->add_option("--group", v_group, "group family")->required()->check(CLI::IsMember(groups));
    v_cmd->add_option("--n", v_n, "rank")->required()->check(CLI::PositiveNumber);
    add_field_options(v_cmd, v_field);
    v_cmd->add_option("--budget", v_scan, "matrix-scan budget (candidates / Lie-algebra points)")
        ->check(CLI::PositiveNumber);
    v_cmd->add_option("--closure-budget", v_closure, "group-element cap for the closure strategy")
        ->check(CLI::PositiveNumber);
    add_output_options(v_cmd, v_out);

    try {
        app.parse(argc, argv);

        if (app.got_subcommand(t_cmd)) {
            std::optional<BigInt> qopt;
            if (t_q > 0) {
                auto [p, k] = factor_prime_power(static_cast<uint64_t>(t_q));
                if (p == 2) fail(Errc::NotOdd, "the field size must be odd");
                if (t_q > (int64_t{1} << 20))
                    fail(Errc::TooLarge, "field sizes beyond 2^20 are unsupported");
                (void)k;
                qopt = BigInt(t_q);
            }
            auto rows = type_rows(static_cast<int>(t_n), qopt);
            t_out.emit(DocKind::Types, types_doc(static_cast<int>(t_n), qopt, rows));
            return 0;
        }
        if (app.got_subcommand(o_cmd)) {
            auto [p, k] = o_field.resolve();
            GroupKind kind = make_kind(o_group, static_cast<int>(o_n), p, k);
            Fq F(p, k);
            auto fams = classify(kind, BigInt(F.q()));
            o_out.emit(DocKind::Orbits, orbits_doc(kind, F, fams));
            return 0;
        }
        if (app.got_subcommand(z_cmd)) {
            auto [p, k] = z_field.resolve();
            GroupKind kind = make_kind(z_group, static_cast<int>(z_n), p, k);
            Fq F(p, k);
            auto series = reg_zeta(kind, BigInt(F.q()));
            auto ledger = expand(series, static_cast<int>(z_levels));
            z_out.emit(DocKind::Zeta, zeta_doc(kind, F, series, ledger, static_cast<int>(z_levels)));
            return 0;
        }
        if (app.got_subcommand(v_cmd)) {
            auto [p, k] = v_field.resolve();
            GroupKind kind = make_kind(v_group, static_cast<int>(v_n), p, k);
            Fq F(p, k);
            OracleBudget budget;
            budget.scan_limit = v_scan;
            budget.group_limit = v_closure;
            CompareReport rep = compare_report(kind, F, budget);
            v_out.emit(DocKind::Verify, verify_doc(kind, F, rep));
            return rep.ok() ? 0 : 4;
        }
        return 1;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace regzeta
