#pragma once

#include <vector>

// Expression corpus for round-trip and determinism checks.
namespace corpus {

inline const std::vector<const char*> expressions = {
    "y",
    "x",
    "0",
    "1",
    "42",
    "3/4",
    "1/2",
    "y*x",
    "x*y",
    "y*x + 1",
    "x*y - y*x",
    "(y + 1)*x",
    "y^2*x^3",
    "(2*y^2)*x^3 - x",
    "1/2*y + 1/3*y^2",
    "(y*x)^2",
    "((y))",
    "y + y",
    "y*y",
    "y^0",
    "x^0",
    "y^2",
    "x^2",
    "2*y",
    "y*2",
    "x*2",
    "y - 1",
    "1 - y",
    "y - y",
    "(x + y)*(x - y)",
    "x*(y + 1)",
    "(y + 1)*(y + 2)*(y + 3)",
    "x^2*y^2",
    "y^2*x^2",
    "2/3*x^4 - 1/5*y*x",
    "(1 + y)^3",
    "(x*y)^2 - (y*x)^2",
    "5/7",
    "y^3*x + y*x^3",
    "(y - 1)^2*(y + 1)^2",
    "x*x",
    "x*x*x",
    "y*(y*(y*y))",
    "((y*x) + (x*y))^2",
    "1 + 2 + 3",
    "1 - 2 - 3",
    "2*(y + x)",
    "(2*y + 3)*x^2 - (y - 4)*x + 7",
    "y^4",
    "x^4*y",
    "1/6*y^2*x^2 + 1/24*y^3*x^3",
    "(x + 1)*(x + y)*(x - 1)",
    "3*y^2 - 2*y + 1",
    "x^3 - x^2 + x - 1",
    "(y^2 + y + 1)*(x^2 + x + 1)",
};

}  // namespace corpus
