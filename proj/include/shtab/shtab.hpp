#pragma once

#include "shtab/bender_knuth.hpp"
#include "shtab/dot.hpp"
#include "shtab/engine.hpp"
#include "shtab/entry.hpp"
#include "shtab/enumeration.hpp"
#include "shtab/errors.hpp"
#include "shtab/jdt.hpp"
#include "shtab/parallel.hpp"
#include "shtab/presets.hpp"
#include "shtab/shape.hpp"
#include "shtab/switching.hpp"
#include "shtab/tableau.hpp"
#include "shtab/text_io.hpp"
#include "shtab/word.hpp"
