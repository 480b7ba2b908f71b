#pragma once

#include "markov/bigint.hpp"
#include "markov/digit_cycles.hpp"
#include "markov/edge_sequences.hpp"
#include "markov/error.hpp"
#include "markov/farey.hpp"
#include "markov/lucas.hpp"
#include "markov/markov_tree.hpp"
#include "markov/pell.hpp"
#include "markov/special_squares.hpp"
