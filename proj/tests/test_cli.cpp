#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "../tools/cli.hpp"

using namespace atkin;

namespace
{

struct outcome
{
    int code;
    std::string out;
    std::string err;
};

outcome run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "atkin_cli");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, AtkinPolyText)
{
    const outcome o = run_cli({"atkin-poly", "--r", "2", "--n", "1", "--format", "text"});
    EXPECT_EQ(o.code, 0);
    EXPECT_EQ(o.out, "X - 720\n");
    EXPECT_EQ(run_cli({"atkin-poly", "--r", "2", "--n", "2", "--route", "both"}).out, "X^2 - 1640*X + 269280\n");
    EXPECT_EQ(run_cli({"atkin-poly", "--r", "0", "--n", "2", "--family", "B"}).out, "X^2 - 1832*X + 497952\n");
}

TEST(Cli, ExtremalJson)
{
    const outcome o = run_cli({"extremal", "--weight", "12", "--terms", "8", "--format", "json"});
    ASSERT_EQ(o.code, 0);
    const json j = json::parse(o.out);
    std::vector<std::string> c;
    for (const auto &x : j.at("G12").at("coefficients")) {
        c.push_back(x.get<std::string>());
    }
    EXPECT_EQ(c, (std::vector<std::string>{"0", "0", "1", "56", "1002", "9296", "57708", "269040"}));
    EXPECT_EQ(run_cli({"extremal", "--weight", "14", "--terms", "8", "--route", "all"}).out,
              "q^2 + 128*q^3 + 4050*q^4 + 58880*q^5 + 525300*q^6 + 3338496*q^7 + O(q^8)\n");
}

TEST(Cli, VerifyCongruence)
{
    const outcome o = run_cli({"verify", "--suite", "congruence", "--pmax", "97", "--quiet"});
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("all 115/115 identities pass"), std::string::npos);
    EXPECT_TRUE(o.err.empty());
}

TEST(Cli, VerifySuites)
{
    for (const char *s : {"section2", "section3", "section6", "rogers", "properties"}) {
        EXPECT_EQ(run_cli({"verify", "--suite", s, "--quiet"}).code, 0) << s;
    }
    EXPECT_EQ(run_cli({"verify", "--suite", "section5", "--order", "4", "--quiet"}).code, 0);
    const outcome p = run_cli({"verify", "--suite", "rogers"});
    EXPECT_NE(p.err.find("[rogers] addphi"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run_cli({"atkin-poly", "--r", "2", "--n", "1", "--bogus"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"atkin-poly", "--r", "5", "--n", "1"}).code, 2);
    EXPECT_EQ(run_cli({"congruence", "--prime", "15"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--precision", "7"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--suite", "section9"}).code, 2);
    EXPECT_EQ(run_cli({"forms", "G5"}).code, 2);
    EXPECT_EQ(run_cli({"inner-product", "--f", "[1,", "--g", "[1]"}).code, 2);
    EXPECT_EQ(run_cli({"hyp", "--upper", "1,2", "--lower", "-1"}).code, 2);
    EXPECT_EQ(run_cli({"faber", "--weight", "3", "--n", "1"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, Deterministic)
{
    const std::vector<std::string> args{"verify", "--suite", "section4,rogers", "--format", "json", "--quiet", "--jobs", "4"};
    const outcome a = run_cli(args), b = run_cli(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    std::vector<std::string> single = args;
    single.back() = "1";
    EXPECT_EQ(run_cli(single).out, a.out);
}

TEST(Cli, TextAndJsonAgree)
{
    const std::vector<std::vector<std::string>> cmds{
        {"atkin-poly", "--r", "6", "--n", "3"},
        {"faber", "--weight", "-4", "--n", "3"},
        {"inner-product", "--f", "[0,1]", "--g", "[0,1]"},
        {"cfrac", "--depth", "4"},
        {"forms", "j", "--precision", "6"},
        {"omega", "--k", "14", "--l", "1", "--count", "6"},
        {"congruence", "--prime", "31"},
    };
    for (auto c : cmds) {
        const outcome t = run_cli(c);
        c.insert(c.end(), {"--format", "json"});
        const outcome j = run_cli(c);
        ASSERT_EQ(t.code, 0);
        ASSERT_EQ(j.code, 0);
        const json doc = json::parse(j.out);
        std::string rendered;
        for (const auto &[k, v] : doc.items()) {
            std::string s;
            if (v.is_string()) {
                s = v.get<std::string>();
            } else if (v.is_boolean()) {
                s = v.get<bool>() ? "true" : "false";
            } else if (v.is_array()) {
                std::vector<rat> r;
                for (const auto &x : v) {
                    r.push_back(rat_from_json(x));
                }
                s = cli::detail::list_text(r, false);
            } else if (v.contains("variable")) {
                s = series_from_json(v).to_text();
            } else if (v.contains("p")) {
                s = fp_poly(v.at("p").get<long>(), v.at("coefficients").get<std::vector<long>>()).to_text();
            } else {
                s = poly_from_json(v).to_text();
            }
            rendered += doc.size() == 1 ? s + "\n" : k + ": " + s + "\n";
        }
        EXPECT_EQ(rendered, t.out) << c.front();
    }
}

TEST(Cli, LatexDescending)
{
    EXPECT_EQ(run_cli({"atkin-poly", "--r", "2", "--n", "2", "--format", "latex"}).out, "X^{2} - 1640 X + 269280\n");
    EXPECT_EQ(run_cli({"atkin-poly", "--r", "2", "--n", "3", "--format", "latex"}).out,
              "X^{3} - \\frac{12576}{5} X^{2} + 1526958 X - 107765856\n");
    EXPECT_EQ(run_cli({"omega", "--k", "14", "--l", "1", "--count", "4", "--format", "latex"}).out,
              "p^{2} + \\frac{1536}{5} p^{3} + O(p^{4})\n");
}

TEST(Cli, Hypergeometric)
{
    EXPECT_EQ(run_cli({"hyp", "--upper", "1/12,5/12", "--lower", "1", "--precision", "3"}).out,
              "1 + 5/144*z + 1105/82944*z^2 + O(z^3)\n");
    EXPECT_EQ(run_cli({"hyp", "--g21", "--upper", "1/12,5/12", "--precision", "2"}).out, "31/72*z + O(z^2)\n");
    EXPECT_EQ(run_cli({"moments", "--count", "3"}).out, "[1, 720, 911520]\n");
}
