#pragma once

#include "errors.hpp"
#include "scalar.hpp"
#include "linear.hpp"
#include "presentation.hpp"
#include "element.hpp"
#include "tensor.hpp"
#include "confluence.hpp"
#include "expression.hpp"
#include "lie_super.hpp"
#include "hopf.hpp"
#include "subalgebra.hpp"
#include "report.hpp"
#include "verify.hpp"
#include "growth.hpp"
#include "session.hpp"
