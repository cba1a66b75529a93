#include "qforms/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "qforms/errors.hpp"

namespace qforms::cli {

using json = nlohmann::ordered_json;

namespace {

json form_json(QuadForm const & f)
{
    return json::array({ f.a, f.b, f.c });
}

json witness_json(std::optional<Witness> const & w)
{
    if (!w)
        return nullptr;
    return json::array({ w->x, w->y });
}

template <typename T>
std::string join(std::vector<T> const & v, std::function<std::string(T const &)> fmt)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += fmt(v[i]);
    }
    return s;
}

std::string show(QuadForm const & f)
{
    std::ostringstream os;
    os << f;
    return os.str();
}

std::string show_ints(std::vector<std::int64_t> const & v)
{
    return join<std::int64_t>(v, [](std::int64_t x) { return std::to_string(x); });
}

std::string show_forms(std::vector<QuadForm> const & v)
{
    return join<QuadForm>(v, show);
}

json blocks_json(GenusPartition const & g)
{
    json blocks = json::array();
    for (GenusBlock const & b : g.blocks) {
        json forms = json::array();
        for (QuadForm const & f : b.forms)
            forms.push_back(form_json(f));
        blocks.push_back({ { "residues", b.residues }, { "forms", forms } });
    }
    return blocks;
}

void blocks_text(std::ostream & out, GenusPartition const & g)
{
    out << "genera:\n";
    for (GenusBlock const & b : g.blocks)
        out << "  {" << show_ints(b.residues) << "}: " << show_forms(b.forms) << '\n';
}

/* Each command fills `result` and writes its text rendering; returns the exit code. */
struct Command
{
    std::string name;
    json inputs = json::object();
    json result = json::object();
    std::ostringstream text;
    int code = exit_ok;
};

void cmd_forms(Command & c, std::int64_t n)
{
    c.inputs["n"] = n;
    Discriminant const d = Discriminant::of_principal(n);
    FormClassGroup const group = class_group(d);
    GenusPartition const genera = genus_partition(d);
    bool const convenient = std::all_of(genera.blocks.begin(), genera.blocks.end(),
                                        [](GenusBlock const & b) { return b.forms.size() == 1; });

    json classes = json::array();
    for (QuadForm const & f : group.classes())
        classes.push_back(form_json(f));
    c.result["D"] = d.value();
    c.result["h"] = group.order();
    c.result["classes"] = classes;
    c.result["invariant_factors"] = group.invariant_factors();
    c.result["table"] = group.table();
    c.result["blocks"] = blocks_json(genera);
    c.result["convenient"] = convenient;

    auto & t = c.text;
    t << "reduced forms for n = " << n << '\n';
    t << "D = " << d.value() << '\n';
    t << "h = " << group.order() << '\n';
    t << "classes:\n";
    for (QuadForm const & f : group.classes())
        t << "  " << f << '\n';
    t << "invariant factors: [" << show_ints(group.invariant_factors()) << "]\n";
    t << "composition table (class indices):\n";
    for (auto const & row : group.table()) {
        t << " ";
        for (std::size_t k : row)
            t << ' ' << k;
        t << '\n';
    }
    blocks_text(t, genera);
    t << "convenient: " << (convenient ? "yes" : "no") << '\n';
}

void cmd_prime(Command & c, std::int64_t p, std::int64_t n)
{
    c.inputs["p"] = p;
    c.inputs["n"] = n;
    PrimeClassification const pc = classify_prime(p, n);
    json forms = json::array();
    for (Representation const & r : pc.forms)
        forms.push_back({ { "m", r.m }, { "x", r.x }, { "y", r.y }, { "form", form_json(r.form) }, { "proper", r.proper } });
    c.result["p"] = pc.p;
    c.result["n"] = pc.n;
    c.result["symbol"] = pc.symbol;
    c.result["residue"] = pc.residue;
    c.result["modulus"] = 4 * n;
    c.result["forms"] = forms;
    std::optional<bool> in_s;
    if (n == 14) {
        in_s = in_fourteen_set(p);
        c.result["in_S"] = *in_s;
    }

    auto & t = c.text;
    t << "p = " << pc.p << ", n = " << pc.n << '\n';
    t << "Legendre symbol (-n/p) = " << pc.symbol << '\n';
    t << "p mod 4n = " << pc.residue << " (mod " << 4 * n << ")\n";
    if (pc.forms.empty())
        t << "not represented by any reduced form of discriminant -4n\n";
    for (Representation const & r : pc.forms)
        t << "represented by " << r.form << " at (x, y) = (" << r.x << ", " << r.y << ")"
          << (r.proper ? ", proper" : "") << '\n';
    if (in_s)
        t << "in S: " << (*in_s ? "yes" : "no") << '\n';
}

void cmd_pq(Command & c, std::int64_t p, std::int64_t q, std::int64_t n, bool check)
{
    c.inputs["p"] = p;
    c.inputs["q"] = q;
    c.inputs["n"] = n;
    c.inputs["check"] = check;
    PairDecision const d = decide_pq(p, q, n);
    c.result["p"] = d.p;
    c.result["q"] = d.q;
    c.result["n"] = d.n;
    c.result["representable"] = d.representable;
    c.result["common_form"] = d.common_form ? form_json(*d.common_form) : json(nullptr);
    c.result["witness"] = witness_json(d.witness);
    c.result["composed_witness"] = witness_json(d.composed_witness);

    auto & t = c.text;
    std::int64_t const pq = p * q;
    if (d.representable) {
        t << "yes: " << p << " * " << q << " = " << pq << " = " << d.witness->x << "^2 + " << n << " * "
          << d.witness->y << "^2\n";
        t << "common reduced form: " << *d.common_form << '\n';
        t << "composed witness: (" << d.composed_witness->x << ", " << d.composed_witness->y << ")\n";
    } else {
        t << "no: " << p << " * " << q << " = " << pq << " is not of the form x^2 + " << n << " y^2\n";
    }
    if (check) {
        auto bf = brute_force_pq(p, q, n);
        bool const agree = bf.has_value() == d.representable;
        c.result["brute_force"] = witness_json(bf);
        c.result["check"] = agree ? "agree" : "mismatch";
        t << "brute force: ";
        if (bf)
            t << "(" << bf->x << ", " << bf->y << ")";
        else
            t << "none";
        t << (agree ? ", agrees\n" : ", MISMATCH\n");
        if (!agree)
            c.code = exit_consistency;
    }
}

void cmd_verify(Command & c, std::int64_t n_max, std::int64_t p_max, unsigned jobs, bool fault)
{
    c.inputs["n_max"] = n_max;
    c.inputs["p_max"] = p_max;
    c.inputs["jobs"] = jobs;
    VerifyReport const r = verify_sweep(n_max, p_max, jobs, fault);
    json list = json::array();
    for (Mismatch const & m : r.mismatches)
        list.push_back({ { "n", m.n }, { "p", m.p }, { "q", m.q }, { "representable", m.decision },
                         { "brute_force", witness_json(m.brute_force) } });
    c.result["n_max"] = r.n_max;
    c.result["p_max"] = r.p_max;
    c.result["pairs_tested"] = r.pairs_tested;
    c.result["representable"] = r.representable;
    c.result["mismatches"] = r.mismatches.size();
    c.result["mismatch_list"] = list;

    auto & t = c.text;
    t << "n <= " << r.n_max << ", p, q <= " << r.p_max << '\n';
    t << "pairs tested: " << r.pairs_tested << '\n';
    t << "representable: " << r.representable << '\n';
    t << "mismatches: " << r.mismatches.size() << '\n';
    for (Mismatch const & m : r.mismatches)
        t << "  n = " << m.n << ", p = " << m.p << ", q = " << m.q << ": decision says "
          << (m.decision ? "yes" : "no") << ", brute force says " << (m.brute_force ? "yes" : "no") << '\n';
    if (!r.mismatches.empty())
        c.code = exit_consistency;
}

void cmd_table(Command & c, std::int64_t n, std::int64_t bound)
{
    c.inputs["n"] = n;
    c.inputs["bound"] = bound;
    PairTable const table = classify_pair_table(n, bound);
    json rows = json::array();
    for (PairTableRow const & row : table.rows) {
        json r = { { "form", form_json(row.form) }, { "residues", row.residues }, { "prime_count", row.prime_count } };
        if (row.s_split) {
            r["in_S"] = row.s_split->in_s;
            r["not_in_S"] = row.s_split->not_in_s;
        }
        rows.push_back(r);
    }
    c.result["modulus"] = table.modulus;
    c.result["rows"] = rows;
    c.result["blocks"] = blocks_json(table.genera);

    auto & t = c.text;
    t << "n = " << table.n << ", primes up to " << table.bound << ", residues mod " << table.modulus << '\n';
    for (PairTableRow const & row : table.rows) {
        t << "  " << row.form << " represents primes in classes {" << show_ints(row.residues) << "} (" << row.prime_count
          << " primes";
        if (row.s_split)
            t << "; in S: " << row.s_split->in_s << ", not in S: " << row.s_split->not_in_s;
        t << ")\n";
    }
    blocks_text(t, table.genera);
}

int exit_code_for(std::exception const & e)
{
    if (dynamic_cast<ConsistencyError const *>(&e))
        return exit_consistency;
    if (dynamic_cast<OverflowError const *>(&e) || dynamic_cast<ResourceLimit const *>(&e))
        return exit_resource;
    if (dynamic_cast<std::invalid_argument const *>(&e) || dynamic_cast<std::domain_error const *>(&e))
        return exit_validation;
    return exit_consistency;
}

} // namespace

VerifyReport verify_sweep(std::int64_t n_max, std::int64_t p_max, unsigned jobs, bool inject_fault)
{
    if (n_max < 1 || p_max < 1)
        throw std::invalid_argument("verify: bounds must be positive");
    jobs = std::max(1u, jobs);

    std::vector<std::int64_t> const all_primes = primes_between(3, p_max);
    struct Task
    {
        std::int64_t n;
        std::size_t p_index;
        std::vector<std::int64_t> qs;
        std::int64_t tested = 0, representable = 0;
        std::vector<Mismatch> mismatches;
    };
    std::vector<Task> tasks;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        std::vector<std::int64_t> eligible;
        for (std::int64_t p : all_primes)
            if (n % p != 0)
                eligible.push_back(p);
        for (std::size_t i = 0; i < eligible.size(); ++i)
            tasks.push_back({ n, i, { eligible.begin() + static_cast<std::ptrdiff_t>(i), eligible.end() }, 0, 0, {} });
    }

    std::atomic<std::size_t> next{ 0 };
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](unsigned id) {
        try {
            for (std::size_t k = next++; k < tasks.size(); k = next++) {
                Task & task = tasks[k];
                std::int64_t const p = task.qs.front();
                for (std::size_t j = 1; j < task.qs.size(); ++j) {
                    std::int64_t const q = task.qs[j];
                    bool decision = decide_pq(p, q, task.n).representable;
                    if (inject_fault && k == 0 && j == 1)
                        decision = !decision;
                    auto bf = brute_force_pq(p, q, task.n);
                    ++task.tested;
                    task.representable += decision;
                    if (decision != bf.has_value())
                        task.mismatches.push_back({ task.n, p, q, decision, bf });
                }
            }
        } catch (...) {
            errors[id] = std::current_exception();
        }
    };
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id)
        threads.emplace_back(worker, id);
    for (auto & th : threads)
        th.join();
    for (auto const & e : errors)
        if (e)
            std::rethrow_exception(e);

    VerifyReport report{ n_max, p_max, 0, 0, {} };
    for (Task & task : tasks) {
        report.pairs_tested += task.tested;
        report.representable += task.representable;
        report.mismatches.insert(report.mismatches.end(), task.mismatches.begin(), task.mismatches.end());
    }
    return report;
}

int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{ "Decide pq = x^2 + n y^2 through reduced binary quadratic forms", "qforms" };
    app.require_subcommand(1);

    std::string format = "text";
    auto add_format = [&](CLI::App * sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({ "text", "json" }));
    };

    std::int64_t n = 0, p = 0, q = 0, n_max = 0, p_max = 0, bound = 0;
    bool check = false, fault = false;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

    auto * forms = app.add_subcommand("forms", "Reduced forms, class group and genera of discriminant -4n");
    forms->add_option("-n", n, "n >= 1")->required();
    add_format(forms);

    auto * prime = app.add_subcommand("prime", "Reduced forms of discriminant -4n representing p");
    prime->add_option("-p", p, "odd prime not dividing n")->required();
    prime->add_option("-n", n, "n >= 1")->required();
    add_format(prime);

    auto * pq = app.add_subcommand("pq", "Decide whether pq = x^2 + n y^2 is solvable");
    pq->add_option("-p", p, "odd prime")->required();
    pq->add_option("-q", q, "odd prime, distinct from p")->required();
    pq->add_option("-n", n, "n >= 1")->required();
    pq->add_flag("--check", check, "Cross-check against a direct search");
    add_format(pq);

    auto * verify = app.add_subcommand("verify", "Sweep the decision against direct search");
    verify->add_option("--n-max", n_max, "largest n")->required();
    verify->add_option("--p-max", p_max, "largest prime")->required();
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_flag("--inject-fault", fault, "Flip one decision (harness self-test)")->group("");
    add_format(verify);

    auto * table = app.add_subcommand("table", "Residues mod 4n of the primes each reduced form represents");
    table->add_option("-n", n, "n >= 1")->required();
    table->add_option("--bound", bound, "largest prime")->required();
    add_format(table);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::ParseError const & e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_validation;
    }

    Command c;
    c.name = app.get_subcommands().front()->get_name();
    try {
        if (c.name == "forms")
            cmd_forms(c, n);
        else if (c.name == "prime")
            cmd_prime(c, p, n);
        else if (c.name == "pq")
            cmd_pq(c, p, q, n, check);
        else if (c.name == "verify")
            cmd_verify(c, n_max, p_max, jobs, fault);
        else
            cmd_table(c, n, bound);
    } catch (std::exception const & e) {
        int const code = exit_code_for(e);
        err << "error: " << e.what() << '\n';
        if (format == "json") {
            json doc = { { "command", c.name }, { "inputs", c.inputs }, { "result", nullptr }, { "status", "error" },
                         { "message", e.what() } };
            if (auto const * h = dynamic_cast<HypothesisError const *>(&e))
                doc["violation"] = to_string(h->kind());
            out << doc.dump() << '\n';
        }
        return code;
    }

    if (format == "json") {
        json doc = { { "command", c.name }, { "inputs", c.inputs }, { "result", c.result },
                     { "status", c.code == exit_ok ? "ok" : "error" } };
        out << doc.dump() << '\n';
    } else {
        out << c.text.str();
    }
    return c.code;
}

} // namespace qforms::cli
