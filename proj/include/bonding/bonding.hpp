#ifndef BONDING_BONDING_HPP
#define BONDING_BONDING_HPP

#include "bonding/builtin.hpp"
#include "bonding/dot.hpp"
#include "bonding/embedding.hpp"
#include "bonding/error.hpp"
#include "bonding/fusion.hpp"
#include "bonding/grammar.hpp"
#include "bonding/hypergraph.hpp"
#include "bonding/io.hpp"
#include "bonding/isomorphism.hpp"
#include "bonding/membership.hpp"
#include "bonding/random.hpp"
#include "bonding/sticker.hpp"
#include "bonding/triangles.hpp"

#endif  // BONDING_BONDING_HPP
