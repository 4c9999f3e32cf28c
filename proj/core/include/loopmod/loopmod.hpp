#pragma once

#include "loopmod/errors.hpp"
#include "loopmod/scalar.hpp"
#include "loopmod/multi_index.hpp"
#include "loopmod/lin_comb.hpp"
#include "loopmod/truncation.hpp"
#include "loopmod/phi_function.hpp"
#include "loopmod/roots.hpp"
#include "loopmod/heisenberg.hpp"
#include "loopmod/check.hpp"
#include "loopmod/heisenberg_module.hpp"
#include "loopmod/phi_verma.hpp"
#include "loopmod/weyl.hpp"
#include "loopmod/weyl_adapter.hpp"
#include "loopmod/diagonal.hpp"
#include "loopmod/affine_algebra.hpp"
#include "loopmod/loop_module.hpp"
#include "loopmod/probe.hpp"
#include "loopmod/serialize.hpp"
#include "loopmod/verify.hpp"
