#include "bracelet/bounding.hpp"
#include "bracelet/bracelet_api.hpp"
#include "bracelet/enclosing_rank.hpp"
#include "bracelet/necklace_rank.hpp"
#include "bracelet/oracle.hpp"
#include "bracelet/palindromic_rank.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <optional>

using namespace bracelet;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Invalid = 1, VerifyFailed = 2, OverBudget = 3 };

struct Options {
    std::string alphabet = "ab";
    size_t length = 0;
    std::string word;
    std::string index;
    std::string set = "bracelet";
    bool set_given = false;
    bool oracle = false;
    bool as_json = false;
    bool one_based = false;
    std::optional<std::uint64_t> budget;
};

std::string str(const Count& c) { return c.str(); }

std::uint64_t budget_of(const Options& o) { return o.budget ? *o.budget : default_budget(); }

json breakdown_json(const Alphabet& a, const Word& v, const RankBreakdown& r) {
    return {{"word", a.format(v)}, {"n", v.size()}, {"k", a.k()},
            {"rn", str(r.rn)},     {"rp", str(r.rp)}, {"re", str(r.re)}, {"rb", str(r.rb)}};
}

RankBreakdown oracle_breakdown(const Word& v, int k, std::uint64_t budget) {
    Oracle o(v.size(), k, budget);
    return {o.rank(RankKind::Necklace, v), o.rank(RankKind::Palindromic, v),
            o.rank(RankKind::Enclosing, v), o.rank(RankKind::Bracelet, v)};
}

RankBreakdown breakdown(const Options& o, const Word& v, int k) {
    return o.oracle ? oracle_breakdown(v, k, budget_of(o)) : rank_bracelet(v, k);
}

const Count& pick(const RankBreakdown& r, const std::string& set) {
    if (set == "necklace")
        return r.rn;
    if (set == "palindromic")
        return r.rp;
    if (set == "enclosing")
        return r.re;
    return r.rb;
}

ClassKind class_kind(const std::string& set) {
    if (set == "necklace")
        return ClassKind::Necklace;
    if (set == "palindromic")
        return ClassKind::PalindromicNecklace;
    if (set == "bracelet")
        return ClassKind::Bracelet;
    throw word_error("set must be bracelet, necklace or palindromic here");
}

int do_rank(const Options& o) {
    Alphabet a(o.alphabet);
    Word v = a.parse(o.word);
    auto r = breakdown(o, v, a.k());
    if (o.as_json)
        std::cout << breakdown_json(a, v, r).dump() << "\n";
    else if (o.set_given)
        std::cout << pick(r, o.set) << "\n";
    else
        std::cout << "rn=" << r.rn << " rp=" << r.rp << " re=" << r.re << " rb=" << r.rb << "\n";
    return Ok;
}

int do_unrank(const Options& o) {
    Alphabet a(o.alphabet);
    if (o.length == 0)
        throw word_error("--length is required");
    if (o.index.empty() || o.index.find_first_not_of("0123456789") != std::string::npos)
        throw word_error("--index must be a nonnegative integer");
    Count z(o.index);
    if (o.one_based) {
        if (z == 0)
            throw word_error("one-based index starts at 1");
        z -= 1;
    }
    Word w;
    if (o.oracle) {
        auto all = enumerate_class(ClassKind::Bracelet, o.length, a.k(), budget_of(o));
        if (z >= all.size())
            throw std::out_of_range("index out of range");
        w = all[z.convert_to<size_t>()];
    } else {
        w = unrank_bracelet(z, o.length, a.k());
    }
    if (o.as_json)
        std::cout << breakdown_json(a, w, breakdown(o, w, a.k())).dump() << "\n";
    else
        std::cout << a.format(w) << "\n";
    return Ok;
}

int do_count(const Options& o) {
    Alphabet a(o.alphabet);
    if (o.length == 0)
        throw word_error("--length is required");
    Count c;
    if (o.oracle) {
        c = enumerate_class(class_kind(o.set), o.length, a.k(), budget_of(o)).size();
    } else if (o.set == "necklace") {
        c = count_necklaces(o.length, a.k());
    } else if (o.set == "palindromic") {
        c = total_palindromic(o.length, a.k());
    } else {
        class_kind(o.set);
        c = count_bracelets(o.length, a.k());
    }
    if (o.as_json)
        std::cout << json{{"n", o.length}, {"k", a.k()}, {"set", o.set}, {"count", str(c)}}.dump() << "\n";
    else
        std::cout << c << "\n";
    return Ok;
}

int do_enumerate(const Options& o) {
    Alphabet a(o.alphabet);
    std::vector<Word> list;
    if (o.set == "enclosing") {
        list = oracle_enclosing(a.parse(o.word), a.k(), budget_of(o));
    } else {
        if (o.length == 0)
            throw word_error("--length is required");
        list = enumerate_class(class_kind(o.set), o.length, a.k(), budget_of(o));
    }
    if (o.as_json) {
        json arr = json::array();
        for (const auto& w : list)
            arr.push_back(a.format(w));
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& w : list)
            std::cout << a.format(w) << "\n";
    }
    return Ok;
}

int do_verify(const Options& o) {
    Alphabet a(o.alphabet);
    if (o.length == 0)
        throw word_error("--length is required");
    int k = a.k();
    Oracle oracle(o.length, k, budget_of(o));
    static const char* names[] = {"rn", "rp", "re", "rb"};
    std::optional<std::string> failure;
    size_t words = 0;
    for_each_word(o.length, k, [&](const Word& v) {
        if (failure)
            return;
        ++words;
        auto r = rank_bracelet(v, k);
        Count want[] = {oracle.rank(RankKind::Necklace, v), oracle.rank(RankKind::Palindromic, v),
                        oracle.rank(RankKind::Enclosing, v), oracle.rank(RankKind::Bracelet, v)};
        const Count* got[] = {&r.rn, &r.rp, &r.re, &r.rb};
        for (int c = 0; c < 4; ++c)
            if (*got[c] != want[c]) {
                failure = a.format(v) + " " + names[c] + " got " + str(*got[c]) + " expected " + str(want[c]);
                return;
            }
    });
    if (o.as_json) {
        json j{{"n", o.length}, {"k", k}, {"words", words}, {"pass", !failure}};
        if (failure)
            j["counterexample"] = *failure;
        std::cout << j.dump() << "\n";
    } else if (failure) {
        std::cout << "FAIL " << *failure << "\n";
    } else {
        std::cout << "PASS n=" << o.length << " k=" << k << " words=" << words << "\n";
    }
    return failure ? VerifyFailed : Ok;
}

int do_tables(const Options& o) {
    Alphabet a(o.alphabet);
    Word v = a.parse(o.word);
    auto t = build_subword_table(v, a.k());
    auto b = build_bounding_tables(t);
    auto key = [](int s) { return s == Bottom ? std::string("bottom") : std::to_string(s); };
    json out = json::array();
    for (size_t l = 0; l <= v.size(); ++l) {
        json row{{"l", l}};
        json subs = json::array();
        for (const auto& w : t.subwords[l])
            subs.push_back(a.format(w));
        row["subwords"] = subs;
        json xw = json::object(), wx = json::object();
        if (l < v.size())
            for (int s = Bottom; s < static_cast<int>(t.size(l)); ++s) {
                json per = json::array();
                for (int x = 0; x < a.k(); ++x)
                    per.push_back(b.XW(l, s, x));
                xw[key(s)] = per;
                wx[key(s)] = b.WX(l, s);
            }
        row["xw"] = xw;
        row["wx"] = wx;
        out.push_back(row);
    }
    std::cout << (o.as_json ? out.dump() : out.dump(1)) << "\n";
    return Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rank and unrank bracelets, necklaces and palindromic necklaces"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c) {
        c->add_option("--alphabet", o.alphabet, "ordered symbols, e.g. ab or abcd");
        c->add_option("--budget", o.budget, "oracle enumeration cap on k^n");
        c->add_flag("--json", o.as_json, "JSON output");
        c->add_flag("--oracle", o.oracle, "use brute-force enumeration");
    };
    std::map<std::string, int (*)(const Options&)> verbs = {
        {"rank", do_rank},         {"unrank", do_unrank}, {"count", do_count},
        {"enumerate", do_enumerate}, {"verify", do_verify}, {"tables", do_tables}};
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, fn] : verbs) {
        auto* c = app.add_subcommand(name);
        common(c);
        subs[name] = c;
    }
    auto set_opt = [&](CLI::App* c) {
        c->add_option("--set", o.set, "bracelet | necklace | palindromic | enclosing")
            ->check(CLI::IsMember({"bracelet", "necklace", "palindromic", "enclosing"}));
    };
    subs["rank"]->add_option("--word", o.word)->required();
    set_opt(subs["rank"]);
    subs["unrank"]->add_option("--length", o.length)->required();
    subs["unrank"]->add_option("--index", o.index)->required();
    subs["unrank"]->add_flag("--one-based", o.one_based);
    subs["count"]->add_option("--length", o.length)->required();
    set_opt(subs["count"]);
    subs["enumerate"]->add_option("--length", o.length);
    subs["enumerate"]->add_option("--word", o.word, "for --set enclosing");
    set_opt(subs["enumerate"]);
    subs["verify"]->add_option("--length", o.length)->required();
    subs["tables"]->add_option("--word", o.word)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Invalid;
    }
    o.set_given = false;
    for (auto* c : app.get_subcommands())
        if (auto* opt = c->get_option_no_throw("--set"))
            o.set_given = opt->count() > 0;

    try {
        for (auto* c : app.get_subcommands())
            return verbs.at(c->get_name())(o);
    } catch (const budget_exceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return OverBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Invalid;
    }
    return Invalid;
}
