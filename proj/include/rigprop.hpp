#pragma once

// Everything except the command line front end.

#include "rigprop/axioms.hpp"
#include "rigprop/error.hpp"
#include "rigprop/instances.hpp"
#include "rigprop/matrix.hpp"
#include "rigprop/numeric.hpp"
#include "rigprop/polynomial.hpp"
#include "rigprop/rewrite.hpp"
#include "rigprop/rig.hpp"
#include "rigprop/semantics.hpp"
#include "rigprop/term.hpp"
#include "rigprop/term_lang.hpp"
