#pragma once

// Umbrella header: the extended-regex AST and parser, the derivative engine,
// the fitness measure, abstraction and neighborhood search, the repair
// pipeline, and the benchmark corpus utilities.

#include "regexmend/alphabet.hpp"
#include "regexmend/ast.hpp"
#include "regexmend/parse.hpp"
#include "regexmend/engine.hpp"
#include "regexmend/evaluate.hpp"
#include "regexmend/abstract.hpp"
#include "regexmend/neighborhood.hpp"
#include "regexmend/repair.hpp"
#include "regexmend/corpus.hpp"
