// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.consts;

public class Timeouts {
  public static final int ALPHA_TIMEOUT = 1;
  public static final int BRAVO_TIMEOUT = 2;
  public static final int CEDAR_TIMEOUT = 3;
  public static final int DELTA_TIMEOUT = 4;
  public static final int EMBER_TIMEOUT = 5;
  public static final int FJORD_TIMEOUT = 6;
  public static final int GAMMA_TIMEOUT = 7;
  public static final int HAZEL_TIMEOUT = 8;
  public static final int IVORY_TIMEOUT = 9;
  public static final int JADE_TIMEOUT = 10;
  public static final int KAPPA_TIMEOUT = 11;
  public static final int LUNAR_TIMEOUT = 12;
  public static final int MAPLE_TIMEOUT = 13;
  public static final int NOBLE_TIMEOUT = 14;
  public static final int OMEGA_TIMEOUT = 15;
  public static final int PRISM_TIMEOUT = 16;
  public static final int QUARTZ_TIMEOUT = 17;
  public static final int RAVEN_TIMEOUT = 18;
  public static final int SIGMA_TIMEOUT = 19;
  public static final int TANGO_TIMEOUT = 20;
  public static final int UMBRA_TIMEOUT = 21;
  public static final int VELVET_TIMEOUT = 22;
  public static final int WILLOW_TIMEOUT = 23;
  public static final int XENON_TIMEOUT = 24;
  public static final int YONDER_TIMEOUT = 25;
  public static final int ZEPHYR_TIMEOUT = 26;
  public static final int AMBER_TIMEOUT = 27;
  public static final int BASALT_TIMEOUT = 28;
  public static final int COBALT_TIMEOUT = 29;
  public static final int DUNE_TIMEOUT = 30;
  public static final int ECHO_TIMEOUT = 31;
  public static final int FLINT_TIMEOUT = 32;
  public static final int GROVE_TIMEOUT = 33;
  public static final int HARBOR_TIMEOUT = 34;
  public static final int INDIGO_TIMEOUT = 35;
  public static final int JUNIPER_TIMEOUT = 36;
  public static final int KESTREL_TIMEOUT = 37;
  public static final int LAGOON_TIMEOUT = 38;
  public static final int MESA_TIMEOUT = 39;
  public static final int NECTAR_TIMEOUT = 40;
  public static final int ONYX_TIMEOUT = 41;
  public static final int PEBBLE_TIMEOUT = 42;
  public static final int QUILL_TIMEOUT = 43;
  public static final int RIDGE_TIMEOUT = 44;
  public static final int SPRUCE_TIMEOUT = 45;
  public static final int THISTLE_TIMEOUT = 46;
  public static final int UPLAND_TIMEOUT = 47;
  public static final int VALE_TIMEOUT = 48;
  public static final int WREN_TIMEOUT = 49;
  public static final int YARROW_TIMEOUT = 50;
  public static final int ZINC_TIMEOUT = 51;
  public static final int ASPEN_TIMEOUT = 52;
  public static final int BIRCH_TIMEOUT = 53;
  public static final int CORAL_TIMEOUT = 54;
  public static final int DAWN_TIMEOUT = 55;
  public static final int ELM_TIMEOUT = 56;
  public static final int FERN_TIMEOUT = 57;
  public static final int GLADE_TIMEOUT = 58;
  public static final int HERON_TIMEOUT = 59;
  public static final int IRIS_TIMEOUT = 60;
}
