#pragma once

// Umbrella header for the perfume-lint library.

#include "perfume/catalog/catalog.hpp"
#include "perfume/catalog/locale.hpp"
#include "perfume/detect/detectors.hpp"
#include "perfume/detect/finding.hpp"
#include "perfume/detect/walk.hpp"
#include "perfume/engine/analyze.hpp"
#include "perfume/engine/discover.hpp"
#include "perfume/report/serialize.hpp"
#include "perfume/source/ast.hpp"
#include "perfume/source/dump.hpp"
#include "perfume/source/index.hpp"
#include "perfume/source/lexer.hpp"
#include "perfume/source/parser.hpp"
#include "perfume/source/printer.hpp"
#include "perfume/stats/corpus.hpp"
#include "perfume/stats/loc.hpp"
#include "perfume/stats/pearson.hpp"
#include "perfume/version.hpp"
