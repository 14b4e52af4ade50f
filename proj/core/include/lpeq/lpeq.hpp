#pragma once

#include "lpeq/atom_set.hpp"
#include "lpeq/classifier.hpp"
#include "lpeq/equivalence.hpp"
#include "lpeq/errors.hpp"
#include "lpeq/harness.hpp"
#include "lpeq/relativized.hpp"
#include "lpeq/se_models.hpp"
#include "lpeq/semantics.hpp"
#include "lpeq/syntax.hpp"
#include "lpeq/transforms.hpp"
#include "lpeq/verdict.hpp"
