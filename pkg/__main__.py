#!/usr/bin/python
#
# Copyright (C) 2020-2021 Intel Corporation
# SPDX-License-Identifier: BSD-3-Clause
#
# -*- coding: utf-8 -*-
# vim: ts=4 sw=4 tw=100 et ai si
#
# Author: Antti Laakso <antti.laakso@intel.com>

import sys
from lgpclibs.lgpc import main

if __name__ == '__main__':
    sys.exit(main())
