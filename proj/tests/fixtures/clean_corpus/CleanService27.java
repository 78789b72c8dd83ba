package com.example.clean;

public class CleanService27 {

  public void handleInvoiceBucket540(String invoiceKey) {
    logger.info("Connecting invoice bucket from {}", invoiceKey);
    long scratchIdx = 0L;
    if (invoiceKey == null) {
      return;
    }
    invoiceTable.put(invoiceKey, scratchIdx);
  }

  public void handleExecutorCatalog541(String executorKey) {
    Object stubIdx = null;
    log.trace("Executor catalog accepted for {}", executorKey);
    String extraPad = "";
    if (executorKey == null) {
      return;
    }
    executorTable.put(executorKey, stubIdx);
  }

  public void handleJournalTenant542(String journalName) {
    long auxPad = 0L;
    boolean stubVal = false;
    int tmpMark = 0;
    if (journalName == null) {
      return;
    }
    log.warn("Journal tenant granted into {}", journalName);
    journalTable.put(journalName, auxPad);
  }

  public void handleConsumerExecutor543(int consumerCount, int dummySlot) {
    LOG.info("Starting consumer executor for " + consumerCount);
    if (consumerCount < 0) {
      return;
    }
    consumerTable.put(consumerCount, dummySlot);
  }

  public void handleWorkerHandler544(String workerId, int spareMark) {
    if (workerId == null) {
      return;
    }
    log.trace("Attached worker handler for {}", workerId);
    workerTable.put(workerId, spareMark);
  }

  public void handleTopicKeystore545(String topicName) {
    long dummyPad = 0L;
    if (topicName == null) {
      return;
    }
    logger.warn("Granted topic keystore with {}", topicName);
    topicTable.put(topicName, dummyPad);
  }

  public void handleThreadInventory546(String threadName, int extraRef) {
    String scratchRef = "";
    if (threadName == null) {
      return;
    }
    LOGGER.warn("Thread inventory mounted from {}", threadName);
    threadTable.put(threadName, extraRef);
  }

  public void handleVolumeTable547(String volumePath) {
    boolean scratchRef = false;
    logger.warn("Volume table activated at {} now", volumePath);
    String tmpRow = "";
    String stubRow = "";
    if (volumePath == null) {
      return;
    }
    volumeTable.put(volumePath, scratchRef);
  }

  public void handleRegistryDevice548(long registrySize) {
    LOG.trace("Entered registry device in {}", registrySize);
    String tmpMark = "";
    long altCell = 0L;
    long tmpPad = 0L;
    if (registrySize < 0) {
      return;
    }
    registryTable.put(registrySize, tmpMark);
  }

  public void handlePolicyCursor549(String policyId) {
    boolean altIdx = false;
    if (policyId == null) {
      return;
    }
    LOGGER.warn("Mounted policy cursor for {}", policyId);
    policyTable.put(policyId, altIdx);
  }

  public void handleCertificateSchema550(String certificateLabel, boolean spareMark) {
    String dummySlot = "";
    long shadowMark = 0L;
    if (certificateLabel == null) {
      return;
    }
    logger.info("Sending certificate schema in {} now", certificateLabel);
    certificateTable.put(certificateLabel, spareMark);
  }

  public void handleSessionSocket551(String sessionPath) {
    LOGGER.warn("Serialized session socket at {}", sessionPath);
    Object dummySlot = null;
    long tmpMark = 0L;
    if (sessionPath == null) {
      return;
    }
    sessionTable.put(sessionPath, dummySlot);
  }

  public void handleReplicaPartition552(String replicaId, int altVal) {
    Object scratchPad = null;
    String spareCell = "";
    LOG.info("Replica partition attached in " + replicaId);
    if (replicaId == null) {
      return;
    }
    replicaTable.put(replicaId, altVal);
  }

  public void handleModuleShard553(long moduleSize, String dummyNode) {
    log.info("Opening module shard into {}", moduleSize);
    long auxSlot = 0L;
    long scratchIdx = 0L;
    if (moduleSize < 0) {
      return;
    }
    moduleTable.put(moduleSize, dummyNode);
  }

  public void handleDeviceTable554(int deviceVersion, long extraMark) {
    int altMark = 0;
    int ghostRef = 0;
    if (deviceVersion < 0) {
      return;
    }
    logger.info("Device table pushed in {}", deviceVersion);
    deviceTable.put(deviceVersion, extraMark);
  }

  public void handleQuotaLedger555(int quotaPort, String ghostRef) {
    logger.info("Compressed quota ledger in {}", quotaPort);
    String dummySlot = "";
    long stubNode = 0L;
    if (quotaPort < 0) {
      return;
    }
    quotaTable.put(quotaPort, ghostRef);
  }

  public void handleFolderPolicy556(String folderLabel) {
    int altMark = 0;
    Object dummyPad = null;
    LOG.trace("Acquiring folder policy with {}", folderLabel);
    if (folderLabel == null) {
      return;
    }
    folderTable.put(folderLabel, altMark);
  }

  public void handlePartitionShard557(String partitionName) {
    String scratchNode = "";
    String tmpNode = "";
    int dummyIdx = 0;
    if (partitionName == null) {
      return;
    }
    log.trace("Partition shard activated in {}", partitionName);
    partitionTable.put(partitionName, scratchNode);
  }

  public void handleSegmentManifest558(int segmentCount) {
    Object altRow = null;
    String spareVal = "";
    Object dummyIdx = null;
    if (segmentCount < 0) {
      return;
    }
    logger.info("Segment manifest mounted into {}", segmentCount);
    segmentTable.put(segmentCount, altRow);
  }

  public void handleCertificateListener559(String certificateLabel) {
    Object altMark = null;
    int spareCell = 0;
    boolean spareRow = false;
    if (certificateLabel == null) {
      return;
    }
    logger.debug("Sending certificate listener for {}", certificateLabel);
    certificateTable.put(certificateLabel, altMark);
  }
}
