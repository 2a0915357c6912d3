#pragma once

#include "geo/script/ast.hpp"
#include "geo/script/evaluator.hpp"
#include "geo/script/parser.hpp"
#include "geo/script/registry.hpp"
#include "geo/script/report.hpp"
#include "geo/script/svg.hpp"
