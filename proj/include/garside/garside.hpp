#pragma once

#include "garside/contract.hpp"
#include "garside/simple_ops.hpp"
#include "garside/element.hpp"
#include "garside/sliding.hpp"
#include "garside/enumeration.hpp"
#include "garside/conjugacy.hpp"
#include "garside/oracle.hpp"
#include "garside/braid.hpp"
#include "garside/braid_words.hpp"
