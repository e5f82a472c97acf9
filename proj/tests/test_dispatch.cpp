#include "doctest.h"

#include "phom/dispatch.hpp"
#include "phom/error.hpp"
#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>

using namespace phom;
using namespace phom::testing;

namespace {

std::string strip_comments(std::istream& is) {
    std::string out, line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] == '#') continue;
        out += line + '\n';
    }
    while (!out.empty() && out.front() == '\n') out.erase(out.begin());
    while (out.size() >= 2 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n') out.pop_back();
    return out;
}

bool tractable(const Verdict& v) { return v.status == Verdict::Status::Tractable; }

}  // namespace

TEST_CASE("dispatch examples") {
    Verdict a = dispatch(GraphClass::OneWayPath, GraphClass::DownwardTree, true);
    CHECK(tractable(a));
    CHECK(a.algorithm == AlgorithmId::L1WPDWT);
    CHECK(a.citation == "l-1WP-DWT");

    Verdict b = dispatch(GraphClass::TwoWayPath, GraphClass::Polytree, false);
    CHECK(b.status == Verdict::Status::Hard);
    CHECK(!b.algorithm);
    CHECK(b.citation == "u-2WP-PT");

    Verdict c = dispatch(GraphClass::All, GraphClass::DownwardTree, false);
    CHECK(c.algorithm == AlgorithmId::UAllDWT);
    CHECK(c.citation == "u-all-DWT");

    CHECK(dispatch("U1WP", "1WP", true).citation == "l-⊔1WP-1WP");
    CHECK(dispatch("⊔2WP", "2WP", false).citation == "u-⊔2WP-2WP");
    CHECK(dispatch("1WP", "Connected", false).citation == "u-1WP-Connected");
    CHECK(dispatch("Connected", "2WP", true).algorithm == AlgorithmId::LConnected2WP);
    CHECK(dispatch("DWT", "PT", false).algorithm == AlgorithmId::UDWTPT);
    CHECK(dispatch("U1WP", "PT", false).citation == "u-1WP-PT");
    CHECK(error_of([] { dispatch("1WP", "forest", true); }) == ErrorCode::UnknownClass);
}

TEST_CASE("union columns read the base column") {
    for (bool labeled : {false, true})
        for (GraphClass q : all_classes) {
            CHECK(dispatch(q, GraphClass::UnionOneWayPath, labeled) == dispatch(q, GraphClass::OneWayPath, labeled));
            CHECK(dispatch(q, GraphClass::UnionTwoWayPath, labeled) == dispatch(q, GraphClass::TwoWayPath, labeled));
            CHECK(dispatch(q, GraphClass::UnionDownwardTree, labeled) == dispatch(q, GraphClass::DownwardTree, labeled));
            CHECK(dispatch(q, GraphClass::UnionPolytree, labeled) == dispatch(q, GraphClass::Polytree, labeled));
            CHECK(dispatch(q, GraphClass::All, labeled) == dispatch(q, GraphClass::Connected, labeled));
        }
}

TEST_CASE("every verdict is well formed") {
    for (bool labeled : {false, true})
        for (GraphClass q : all_classes)
            for (GraphClass i : all_classes) {
                Verdict v = dispatch(q, i, labeled);
                CHECK(v.status != Verdict::Status::BruteForceOnly);
                CHECK(v.algorithm.has_value() == tractable(v));
                CHECK(!v.citation.empty());
            }
}

TEST_CASE("verdicts are monotone over the class lattice") {
    for (bool labeled : {false, true})
        for (GraphClass q : all_classes)
            for (GraphClass i : all_classes) {
                Verdict v = dispatch(q, i, labeled);
                for (GraphClass q2 : all_classes)
                    for (GraphClass i2 : all_classes) {
                        Verdict w = dispatch(q2, i2, labeled);
                        if (tractable(v) && class_includes(q2, q) && class_includes(i2, i)) CHECK(tractable(w));
                        if (!tractable(v) && class_includes(q, q2) && class_includes(i, i2)) CHECK(!tractable(w));
                    }
                // the unlabeled problem is a special case of the labeled one
                if (labeled && tractable(v)) CHECK(tractable(dispatch(q, i, false)));
            }
}

TEST_CASE("tables match the audited golden file") {
    std::ifstream golden(std::string(PHOM_TEST_DATA) + "/tables_golden.txt");
    REQUIRE(golden);
    std::istringstream rendered(render_tables());
    CHECK(strip_comments(rendered) == strip_comments(golden));

    std::string text = render_tables();
    std::size_t t = 0, h = 0;
    for (std::size_t p = 0; (p = text.find("| T ", p)) != std::string::npos; ++p) ++t;
    for (std::size_t p = 0; (p = text.find("| H ", p)) != std::string::npos; ++p) ++h;
    CHECK(t == 42);
    CHECK(h == 33);
}

TEST_CASE("running a tractable algorithm outside its class is refused") {
    CHECK(error_of([] { run_tractable(AlgorithmId::L1WPDWT, example_query(), example_instance()); }) == ErrorCode::ClassMismatch);
    CHECK(error_of([] { run_tractable(AlgorithmId::UAllDWT, example_query(), example_instance()); }) == ErrorCode::ClassMismatch);
}
