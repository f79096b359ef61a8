#pragma once

// Exact computation in character groups of graded connected Hopf algebras,
// truncated at a finite degree.

#include "hopfchar/characters.hpp"
#include "hopfchar/conv_algebra.hpp"
#include "hopfchar/errors.hpp"
#include "hopfchar/evolution.hpp"
#include "hopfchar/funcalc.hpp"
#include "hopfchar/hopf_structure.hpp"
#include "hopfchar/ideals.hpp"
#include "hopfchar/io.hpp"
#include "hopfchar/rational.hpp"
#include "hopfchar/rings.hpp"
#include "hopfchar/rooted_trees.hpp"
