#pragma once

#include "reflekta/errors.hpp"
#include "reflekta/vector.hpp"
#include "reflekta/normal_form.hpp"
#include "reflekta/lattice.hpp"
#include "reflekta/gf.hpp"
#include "reflekta/coset_set.hpp"
#include "reflekta/root_system.hpp"
#include "reflekta/weyl.hpp"
#include "reflekta/affine_system.hpp"
#include "reflekta/deciders.hpp"
#include "reflekta/enumerator.hpp"
#include "reflekta/parallel.hpp"
