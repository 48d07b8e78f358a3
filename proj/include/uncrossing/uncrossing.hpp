#pragma once

#include "uncrossing/bitset.hpp"
#include "uncrossing/bruhat.hpp"
#include "uncrossing/cw.hpp"
#include "uncrossing/dot.hpp"
#include "uncrossing/ec_shelling.hpp"
#include "uncrossing/errors.hpp"
#include "uncrossing/finite_poset.hpp"
#include "uncrossing/isomorphism.hpp"
#include "uncrossing/label.hpp"
#include "uncrossing/lemmas.hpp"
#include "uncrossing/mobius.hpp"
#include "uncrossing/parallel.hpp"
#include "uncrossing/permutation.hpp"
#include "uncrossing/report.hpp"
#include "uncrossing/tuffley.hpp"
#include "uncrossing/uncrossing_poset.hpp"
#include "uncrossing/wire_word.hpp"
