#include <doctest.h>

#include <cmath>
#include <sstream>

#include "econreg/figure.hpp"
#include "helpers.hpp"

using namespace econreg;
using namespace econreg::report;
using testing::kind_of;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

void check_document(const std::string& svg) {
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.ends_with("</svg>\n"));
  CHECK(count(svg, "<g") == count(svg, "</g>"));
  CHECK(svg.find("nan") == std::string::npos);
  CHECK(svg.find("inf") == std::string::npos);
}

}  // namespace

TEST_SUITE("figure") {
  TEST_CASE("43-point scatter has 43 marks") {
    const auto ds = testing::synthetic_dataset();
    const auto spec = scatter_spec(ds, "SP500", "GPDI");
    CHECK(spec.title == "SCATTERPLOT OF GPDI AND SP500");
    const auto svg = render_figure(spec);
    check_document(svg);
    CHECK(count(svg, "class=\"mark\"") == 43);
    CHECK(svg.find("SCATTERPLOT OF GPDI AND SP500") != std::string::npos);
  }

  TEST_CASE("single point gets padded axes") {
    const FigureSpec spec{FigureKind::scatter, "X", "Y", {{1.0, 1.0}}, "one"};
    const auto svg = render_figure(spec);
    check_document(svg);
    CHECK(count(svg, "class=\"mark\"") == 1);
    CHECK(count(svg, "class=\"tick\"") + count(svg, "<line") >= 4);
  }

  TEST_CASE("line figure keeps input order with increasing x") {
    const auto ds = testing::synthetic_dataset();
    const auto spec = line_spec(ds.column("CPIU"));
    CHECK(spec.kind == FigureKind::line);
    CHECK(spec.points.size() == 43);
    const auto svg = render_figure(spec);
    check_document(svg);
    CHECK(count(svg, "class=\"mark\"") == 1);
    const auto start = svg.find("points=\"") + 8;
    std::istringstream pts(svg.substr(start, svg.find('"', start) - start));
    std::string pair;
    double prev = -1.0;
    int n = 0;
    while (pts >> pair) {
      const double x = std::stod(pair.substr(0, pair.find(',')));
      CHECK(x > prev);
      prev = x;
      ++n;
    }
    CHECK(n == 43);
  }

  TEST_CASE("errors") {
    const FigureSpec empty{FigureKind::scatter, "X", "Y", {}, "empty"};
    CHECK(kind_of([&] { render_figure(empty); }) == ErrorKind::DegenerateRange);
    const FigureSpec bad{FigureKind::line, "X", "Y", {{1.0, NAN}}, "bad"};
    CHECK(kind_of([&] { render_figure(bad); }) == ErrorKind::InvalidArgument);
    const FigureSpec flat{FigureKind::line, "X", "Y", {{1.0, 2.0}, {2.0, 2.0}, {3.0, 2.0}}, "flat"};
    CHECK_NOTHROW(check_document(render_figure(flat)));
  }

  TEST_CASE("deterministic and escaped") {
    const FigureSpec spec{FigureKind::scatter, "A<B", "C&D", {{0.5, 2.0}, {1.5, -3.0}}, "\"t\""};
    const auto a = render_figure(spec);
    CHECK(a == render_figure(spec));
    CHECK(a.find("A&lt;B") != std::string::npos);
    CHECK(a.find("C&amp;D") != std::string::npos);
    CHECK(a.find("A<B") == std::string::npos);
  }
}
