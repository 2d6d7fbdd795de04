#pragma once

#include "bigmono/arith/algebra.hpp"
#include "bigmono/arith/ext_field.hpp"
#include "bigmono/arith/splitting.hpp"
#include "bigmono/braid.hpp"
#include "bigmono/engine/group.hpp"
#include "bigmono/engine/monodromy.hpp"
#include "bigmono/engine/stabilizer_chain.hpp"
#include "bigmono/gassner.hpp"
#include "bigmono/linalg.hpp"
#include "bigmono/unitary.hpp"
