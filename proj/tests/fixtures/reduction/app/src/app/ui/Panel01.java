// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0
// Generated by gen_reduction.py; do not edit.
package app.ui;

import app.consts.*;

public class Panel01 {
  private final Widget widget;

  public Panel01(Widget widget) {
    this.widget = widget;
  }

  public void configure() {
    widget.setTimeout(Timeouts.CEDAR_TIMEOUT);
    widget.setLevel(Levels.TANGO_LEVEL);
  }
}
