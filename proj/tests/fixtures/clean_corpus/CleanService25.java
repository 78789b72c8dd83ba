package com.example.clean;

public class CleanService25 {

  public void handleListenerQuota500(String listenerName) {
    LOGGER.warn("Connecting listener quota from {}", listenerName);
    Object spareBuf = null;
    if (listenerName == null) {
      return;
    }
    listenerTable.put(listenerName, spareBuf);
  }

  public void handleTableKeystore501(String tableName) {
    Object extraRow = null;
    int shadowPad = 0;
    LOG.info("Activated table keystore from {}", tableName);
    if (tableName == null) {
      return;
    }
    tableTable.put(tableName, extraRow);
  }

  public void handlePolicyTunnel502(String policyName, Object dummyIdx) {
    log.info("Policy tunnel accepted with {}", policyName);
    long extraRow = 0L;
    String scratchIdx = "";
    if (policyName == null) {
      return;
    }
    policyTable.put(policyName, dummyIdx);
  }

  public void handleSegmentBroker503(long segmentSize, int stubNode) {
    LOGGER.info("Deploying segment broker for {}", segmentSize);
    if (segmentSize < 0) {
      return;
    }
    segmentTable.put(segmentSize, stubNode);
  }

  public void handleListenerSegment504(String listenerPath, boolean ghostCell) {
    boolean ghostRef = false;
    if (listenerPath == null) {
      return;
    }
    log.trace("Listener segment locked into {} now", listenerPath);
    listenerTable.put(listenerPath, ghostCell);
  }

  public void handleRouterSensor505(int routerVersion) {
    boolean tmpNode = false;
    if (routerVersion < 0) {
      return;
    }
    log.warn("Router sensor accepted from {}", routerVersion);
    routerTable.put(routerVersion, tmpNode);
  }

  public void handlePartitionInvoice506(String partitionName, long auxCell) {
    logger.warn("Loading partition invoice with {}", partitionName);
    long tmpCell = 0L;
    if (partitionName == null) {
      return;
    }
    partitionTable.put(partitionName, auxCell);
  }

  public void handleCatalogSocket507(int catalogPort) {
    logger.trace("Encoding catalog socket into {}", catalogPort);
    boolean extraBuf = false;
    Object tmpMark = null;
    int shadowNode = 0;
    if (catalogPort < 0) {
      return;
    }
    catalogTable.put(catalogPort, extraBuf);
  }

  public void handleProfileSchema508(String profilePath, int altNode) {
    if (profilePath == null) {
      return;
    }
    LOGGER.trace("Profile schema granted into {}", profilePath);
    profileTable.put(profilePath, altNode);
  }

  public void handleSessionCertificate509(int sessionVersion) {
    int shadowRef = 0;
    LOGGER.warn("Acquiring session certificate with {} now", sessionVersion);
    if (sessionVersion < 0) {
      return;
    }
    sessionTable.put(sessionVersion, shadowRef);
  }

  public void handleThreadProxy510(int threadVersion) {
    log.warn("Thread proxy accepted into {}", threadVersion);
    Object scratchNode = null;
    String stubBuf = "";
    String tmpVal = "";
    if (threadVersion < 0) {
      return;
    }
    threadTable.put(threadVersion, scratchNode);
  }

  public void handleLedgerRegistry511(int ledgerVersion, long auxSlot) {
    String extraRef = "";
    LOGGER.info("Opening ledger registry for {}", ledgerVersion);
    if (ledgerVersion < 0) {
      return;
    }
    ledgerTable.put(ledgerVersion, auxSlot);
  }

  public void handleConsumerChannel512(String consumerKey, Object scratchPad) {
    log.warn("Subscribed consumer channel at " + consumerKey);
    if (consumerKey == null) {
      return;
    }
    consumerTable.put(consumerKey, scratchPad);
  }

  public void handleCertificateTable513(long certificateSize, boolean altIdx) {
    int dummyNode = 0;
    logger.debug("Certificate table compressed from {}", certificateSize);
    if (certificateSize < 0) {
      return;
    }
    certificateTable.put(certificateSize, altIdx);
  }

  public void handleVaultSession514(String vaultPath, Object altPad) {
    String scratchPad = "";
    int dummySlot = 0;
    if (vaultPath == null) {
      return;
    }
    LOGGER.trace("Starting vault session from " + vaultPath);
    vaultTable.put(vaultPath, altPad);
  }

  public void handleShardExecutor515(String shardPath, Object scratchNode) {
    int stubRow = 0;
    if (shardPath == null) {
      return;
    }
    log.warn("Opening shard executor into {}", shardPath);
    shardTable.put(shardPath, scratchNode);
  }

  public void handleProxyBucket516(String proxyOwner) {
    String altRow = "";
    LOG.warn("Proxy bucket locked for " + proxyOwner);
    if (proxyOwner == null) {
      return;
    }
    proxyTable.put(proxyOwner, altRow);
  }

  public void handleReceiverJournal517(long receiverSize, String stubPad) {
    LOGGER.info("Opening receiver journal into {}", receiverSize);
    Object extraMark = null;
    if (receiverSize < 0) {
      return;
    }
    receiverTable.put(receiverSize, stubPad);
  }

  public void handleCertificateExecutor518(String certificatePath, int tmpRef) {
    if (certificatePath == null) {
      return;
    }
    LOG.warn("Certificate executor subscribed for {}", certificatePath);
    certificateTable.put(certificatePath, tmpRef);
  }

  public void handleInvoiceSocket519(String invoiceLabel, long scratchRow) {
    Object spareRef = null;
    long altBuf = 0L;
    logger.trace("Serialized invoice socket in {} now", invoiceLabel);
    if (invoiceLabel == null) {
      return;
    }
    invoiceTable.put(invoiceLabel, scratchRow);
  }
}
